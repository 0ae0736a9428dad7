//! The `legaug` command line: argument parsing, dispatch and output.
//!
//! Exit status is 0 on success, 1 when the computation reports an error and
//! 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use legaug_core::algebra::FieldSpec;
use legaug_core::augment::{check_augmentation, DEFAULT_BUDGET};
use legaug_core::correspond::{
    augmentation_to_ruling, construct_odd_variety_augmentation, ruling_to_dipped_augmentation, undip_augmentation,
};
use legaug_core::lift::{lift_z2_augmentation, Z2Augmentation};
use legaug_core::rulings::{enumerate_rulings, ruling_from_switches};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::formats::*;
use crate::input::Input;
use crate::parallel;

/// Output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Invariants, rulings and augmentations of Legendrian knot fronts.
#[derive(Debug, Parser)]
#[command(name = "legaug", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Front (`plat m: …` or JSON) or DGA (text or JSON) file.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Grading modulus ρ; must divide 2r.
    #[arg(long, global = true, default_value_t = 0)]
    pub rho: u32,
    /// `Q` or `Fp:<p>`; defaults to `Fp:2` for searches and `Q` otherwise.
    #[arg(long, global = true)]
    pub field: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Cap on the number of candidate assignments in a search.
    #[arg(long, global = true, env = "LEGAUG_BUDGET")]
    pub budget: Option<u128>,
    /// Number of worker threads for searches.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Thurston–Bennequin and rotation numbers of a front.
    Invariants,
    /// The DGA of a front, or a loaded DGA, in dump format.
    Dga,
    /// Validates the DGA and, with `--values`, an augmentation of it.
    Check {
        #[arg(long)]
        values: Option<String>,
    },
    /// All ρ-graded normal rulings.
    Rulings {
        /// Add a slice-by-slice picture of each ruling.
        #[arg(long)]
        render: bool,
    },
    /// All ρ-graded augmentations over a prime field.
    Augs,
    /// The set of values of ε(t) over all ρ-graded augmentations.
    Variety,
    /// The ruling of an augmentation, with its dipped values and base-point moves.
    Aug2ruling {
        /// `name=value` pairs; unlisted generators are 0.
        #[arg(long)]
        values: String,
    },
    /// An augmentation built from a ruling given by its switches.
    Ruling2aug {
        /// 1-based switched crossings, e.g. `1,2,3`.
        #[arg(long)]
        switches: String,
        /// For odd ρ: build the augmentation with ε(t) = −x².
        #[arg(long)]
        x: Option<String>,
    },
    /// Lifts a mod-2 augmentation to an integer one with ε(t) = −1.
    Lift {
        /// Generators sent to 1, as `name=1` pairs.
        #[arg(long)]
        values: String,
    },
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let Some(path) = cli.input.clone() else {
        let _ = writeln!(err, "error: --input FILE is required");
        return 2;
    };
    match Input::load(&path).and_then(|input| execute(&cli, &input)) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn field_or(cli: &Cli, default: FieldSpec) -> Result<FieldSpec, CliError> {
    match &cli.field {
        Some(f) => Ok(FieldSpec::parse(f)?),
        None => Ok(default),
    }
}

fn emit(cli: &Cli, text: String, json: Value) -> String {
    match cli.format {
        Format::Text => text,
        Format::Json => to_json_string(&json),
    }
}

/// Runs one command on a loaded input and renders its output.
pub fn execute(cli: &Cli, input: &Input) -> Result<String, CliError> {
    let rho = cli.rho;
    let budget = cli.budget.unwrap_or(DEFAULT_BUDGET);
    match &cli.command {
        Command::Invariants => {
            let d = input.front("invariants")?;
            let inv = d.classical_invariants();
            Ok(emit(cli, format!("tb={} r={}\n", inv.tb, inv.r), json!({ "r": inv.r, "tb": inv.tb })))
        }
        Command::Dga => {
            let dga = input.dga();
            Ok(emit(cli, dga.to_text(), dga_to_json(&dga)))
        }
        Command::Check { values } => {
            let dga = input.dga();
            dga.validate()?;
            let mut text = format!(
                "ok: {} generators, {} base-point variables, gradings consistent, d^2 = 0\n",
                dga.len(),
                dga.var_names.len()
            );
            let mut report = json!({ "generators": dga.len(), "valid": true, "variables": dga.var_names.len() });
            if let Some(values) = values {
                let aug = parse_assignment(&dga, field_or(cli, FieldSpec::Rationals)?, rho, values)?;
                check_augmentation(&dga, &aug)?;
                text.push_str(&format!("augmentation ok: eps(t) = {}\n", aug.t_product()));
                report["augmentation"] = augmentation_to_json(&dga, &aug);
            }
            Ok(emit(cli, text, report))
        }
        Command::Rulings { render } => {
            let d = input.front("rulings")?;
            let rulings = enumerate_rulings(d, rho)?;
            let mut text = String::new();
            let mut list = Vec::new();
            for r in &rulings {
                text.push_str(&ruling_to_text(r));
                text.push('\n');
                let mut j = ruling_to_json(r);
                if *render {
                    text.push_str(&r.render());
                    j["render"] = Value::String(r.render());
                }
                list.push(j);
            }
            text.push_str(&format!("count: {}\n", rulings.len()));
            Ok(emit(cli, text, json!({ "count": rulings.len(), "rulings": list })))
        }
        Command::Augs => {
            let dga = input.dga();
            let field = field_or(cli, FieldSpec::Prime(2))?;
            let augs = parallel::enumerate_augmentations(&dga, field, rho, budget, cli.jobs)?;
            let mut text: String = augs.iter().map(|a| augmentation_to_text(&dga, a) + "\n").collect();
            text.push_str(&format!("count: {}\n", augs.len()));
            let json = Value::Array(augs.iter().map(|a| augmentation_to_json(&dga, a)).collect());
            Ok(emit(cli, text, json))
        }
        Command::Variety => {
            let dga = input.dga();
            let field = field_or(cli, FieldSpec::Prime(2))?;
            let v = parallel::augmentation_variety(&dga, field, rho, budget, cli.jobs)?;
            let items: Vec<String> = v.values.iter().map(|x| x.to_string()).collect();
            Ok(emit(cli, format!("{{{}}}\n", items.join(",")), json!(items)))
        }
        Command::Aug2ruling { values } => {
            let d = input.front("aug2ruling")?;
            let dga = input.dga();
            let aug = parse_assignment(&dga, field_or(cli, FieldSpec::Rationals)?, rho, values)?;
            let w = augmentation_to_ruling(d, &aug)?;
            let mut text = format!("ruling: {}\ndipped: {}\n", ruling_to_text(&w.ruling), dipped_to_text(&w.dipped));
            text.push_str(&moves_to_text(&w.dipped.moves));
            let signs: Vec<Value> = w
                .sign_choices
                .iter()
                .map(|(j, s)| json!({ "crossing": j, "signs": s.iter().map(|&b| if b { "-" } else { "+" }).collect::<Vec<_>>() }))
                .collect();
            let json = json!({
                "dipped": dipped_to_json(&w.dipped),
                "moves": moves_to_json(&w.dipped.moves),
                "ruling": ruling_to_json(&w.ruling),
                "sign_choices": signs,
            });
            Ok(emit(cli, text, json))
        }
        Command::Ruling2aug { switches, x } => {
            let d = input.front("ruling2aug")?;
            let dga = input.dga();
            let field = field_or(cli, FieldSpec::Rationals)?;
            let ruling = ruling_from_switches(d, rho, &parse_switches(switches)?)?;
            match x {
                Some(x) => {
                    let aug = construct_odd_variety_augmentation(d, &ruling, &field.parse_value(x)?, rho)?;
                    let text = format!("augmentation: {}\n", augmentation_to_text(&dga, &aug));
                    Ok(emit(cli, text, json!({ "augmentation": augmentation_to_json(&dga, &aug) })))
                }
                None => {
                    let dipped = ruling_to_dipped_augmentation(d, &ruling, field, rho)?;
                    let aug = undip_augmentation(&dipped)?;
                    let text = format!(
                        "dipped: {}\naugmentation: {}\n",
                        dipped_to_text(&dipped),
                        augmentation_to_text(&dga, &aug)
                    );
                    let json = json!({
                        "augmentation": augmentation_to_json(&dga, &aug),
                        "dipped": dipped_to_json(&dipped),
                    });
                    Ok(emit(cli, text, json))
                }
            }
        }
        Command::Lift { values } => {
            let d = input.front("lift")?;
            let dga = input.dga();
            let z2 = Z2Augmentation::from_augmentation(&parse_assignment(&dga, FieldSpec::Prime(2), rho, values)?)?;
            let aug = lift_z2_augmentation(d, &z2)?;
            let mut json = augmentation_to_json(&dga, &aug);
            json["field"] = Value::String("Z".to_string());
            Ok(emit(cli, format!("{}\n", augmentation_to_text(&dga, &aug)), json))
        }
    }
}
