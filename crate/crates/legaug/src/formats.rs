//! Text and JSON forms of fronts, DGAs, rulings, augmentations and
//! base-point move logs.
//!
//! JSON objects use sorted keys and carry field values as strings (`"-1"`,
//! `"1/2"`), so output is byte-stable.

use legaug_core::algebra::{AlgebraElement, FieldSpec, FieldValue};
use legaug_core::augment::{Augmentation, Provenance};
use legaug_core::correspond::{BasePointMove, DippedAugmentation};
use legaug_core::dga::CeDga;
use legaug_core::diagram::FrontDiagram;
use legaug_core::rulings::{ruling_from_switches, NormalRuling};
use serde_json::{json, Map, Value};

use crate::error::CliError;

/// `{"m": …, "name": …, "word": […]}`.
pub fn front_to_json(d: &FrontDiagram) -> Value {
    json!({ "m": d.m, "name": d.name, "word": d.word })
}

pub fn front_from_json(v: &Value) -> Result<FrontDiagram, CliError> {
    let m = v.get("m").and_then(Value::as_u64).ok_or_else(|| CliError::format("front", "missing integer `m`"))?;
    let word = v
        .get("word")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::format("front", "missing array `word`"))?
        .iter()
        .map(|x| x.as_u64().map(|p| p as usize).ok_or_else(|| CliError::format("front", "crossings must be integers")))
        .collect::<Result<Vec<_>, _>>()?;
    let name = v.get("name").and_then(Value::as_str).unwrap_or("");
    Ok(FrontDiagram::new(name, m as usize, word)?)
}

/// `{"generators": [{"differential", "grading", "name"}…], "variables": […]}`.
pub fn dga_to_json(dga: &CeDga) -> Value {
    let variables: Vec<Value> = dga
        .var_names
        .iter()
        .zip(&dga.var_gradings)
        .map(|(n, g)| json!({ "grading": g, "name": n }))
        .collect();
    let generators: Vec<Value> = (0..dga.len())
        .map(|g| {
            json!({
                "differential": dga.element_text(&dga.differentials[g]),
                "grading": dga.gradings[g],
                "name": dga.gen_names[g],
            })
        })
        .collect();
    json!({ "generators": generators, "variables": variables })
}

pub fn dga_from_json(v: &Value) -> Result<CeDga, CliError> {
    let entries = |key: &str| -> Result<Vec<(String, i64, Option<String>)>, CliError> {
        let list = match v.get(key) {
            None => return Ok(Vec::new()),
            Some(x) => x.as_array().ok_or_else(|| CliError::format("DGA", format!("`{key}` must be an array")))?,
        };
        list.iter()
            .map(|e| {
                let name = e.get("name").and_then(Value::as_str).ok_or_else(|| CliError::format("DGA", "entry without `name`"))?;
                let grading = e.get("grading").and_then(Value::as_i64).ok_or_else(|| CliError::format("DGA", "entry without `grading`"))?;
                let diff = e.get("differential").and_then(Value::as_str).map(str::to_string);
                Ok((name.to_string(), grading, diff))
            })
            .collect()
    };
    let vars = entries("variables")?;
    let gens = entries("generators")?;
    let gen_names: Vec<String> = gens.iter().map(|g| g.0.clone()).collect();
    let var_names: Vec<String> = vars.iter().map(|x| x.0.clone()).collect();
    let differentials = gens
        .iter()
        .map(|g| AlgebraElement::parse(g.2.as_deref().unwrap_or("0"), &gen_names, &var_names))
        .collect::<Result<Vec<_>, _>>()?;
    let dga = CeDga {
        gradings: gens.iter().map(|g| g.1).collect(),
        gen_names,
        var_gradings: vars.iter().map(|x| x.1).collect(),
        var_names,
        differentials,
    };
    dga.validate()?;
    Ok(dga)
}

/// `{"configurations": [one tag per crossing], "switches": [1-based]}`.
pub fn ruling_to_json(r: &NormalRuling) -> Value {
    let switches: Vec<usize> = r.switches.iter().map(|&j| j + 1).collect();
    let configurations: Vec<String> = r.configs.iter().map(|c| c.to_string()).collect();
    json!({ "configurations": configurations, "switches": switches })
}

/// Reads the switches of a ruling JSON object and rebuilds the ruling.
pub fn ruling_from_json(d: &FrontDiagram, rho: u32, v: &Value) -> Result<NormalRuling, CliError> {
    let switches = v
        .get("switches")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::format("ruling", "missing array `switches`"))?
        .iter()
        .map(|x| match x.as_u64() {
            Some(j) if j >= 1 => Ok(j as usize - 1),
            _ => Err(CliError::format("ruling", "switches are 1-based crossing indices")),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ruling_from_switches(d, rho, &switches)?)
}

/// One line: switched crossings, then every configuration.
pub fn ruling_to_text(r: &NormalRuling) -> String {
    let switches: Vec<String> = r.switches.iter().map(|j| format!("c{}", j + 1)).collect();
    let configs: Vec<String> = r.configs.iter().map(|c| c.to_string()).collect();
    format!("switches: {} | {}", if switches.is_empty() { "-".to_string() } else { switches.join(" ") }, configs.join(" "))
}

/// Parses `1,2,3` (1-based crossing indices) into 0-based switches.
pub fn parse_switches(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| match s.trim_start_matches('c').parse::<usize>() {
            Ok(j) if j >= 1 => Ok(j - 1),
            _ => Err(CliError::format("switch list", format!("`{s}` is not a 1-based crossing index"))),
        })
        .collect()
}

fn provenance_tag(p: Provenance) -> &'static str {
    match p {
        Provenance::BruteForce => "brute-force",
        Provenance::Constructed => "constructed",
        Provenance::Lifted => "lifted",
        Provenance::Given => "given",
    }
}

fn value_map(names: &[String], values: &[FieldValue], skip_zero: bool) -> Map<String, Value> {
    names
        .iter()
        .zip(values)
        .filter(|(_, v)| !(skip_zero && v.is_zero()))
        .map(|(n, v)| (n.clone(), Value::String(v.to_string())))
        .collect()
}

/// `{"field", "provenance", "rho", "tvalues": {…}, "values": {…}}`.
pub fn augmentation_to_json(dga: &CeDga, aug: &Augmentation) -> Value {
    json!({
        "field": aug.field.to_string(),
        "provenance": provenance_tag(aug.provenance),
        "rho": aug.rho,
        "tvalues": value_map(&dga.var_names, &aug.tvalues, false),
        "values": value_map(&dga.gen_names, &aug.values, false),
    })
}

/// `c1=1 c2=0 … t=-1`.
pub fn augmentation_to_text(dga: &CeDga, aug: &Augmentation) -> String {
    dga.gen_names
        .iter()
        .zip(&aug.values)
        .chain(dga.var_names.iter().zip(&aug.tvalues))
        .map(|(n, v)| format!("{n}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses `name=value` pairs separated by spaces or commas. Unlisted
/// generators are `0`; unlisted variables are `1` over `F_2` and an error
/// otherwise.
pub fn parse_assignment(dga: &CeDga, field: FieldSpec, rho: u32, text: &str) -> Result<Augmentation, CliError> {
    let mut values = vec![field.zero(); dga.len()];
    let mut tvalues: Vec<Option<FieldValue>> = vec![None; dga.var_names.len()];
    for item in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()) {
        let (name, value) =
            item.split_once('=').ok_or_else(|| CliError::format("assignment", format!("`{item}` is not name=value")))?;
        let v = field.parse_value(value)?;
        if let Some(g) = dga.index_of(name) {
            values[g] = v;
        } else if let Some(i) = dga.var_names.iter().position(|n| n == name) {
            tvalues[i] = Some(v);
        } else {
            return Err(CliError::format("assignment", format!("unknown generator `{name}`")));
        }
    }
    let tvalues = tvalues
        .into_iter()
        .enumerate()
        .map(|(i, t)| match t {
            Some(v) => Ok(v),
            None if field == FieldSpec::Prime(2) => Ok(field.one()),
            None => Err(CliError::format("assignment", format!("no value for {}", dga.var_names[i]))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Augmentation { field, rho, values, tvalues, provenance: Provenance::Given })
}

/// `[{"description", "shifts": [[generator, exponent]…], "var"}…]`.
pub fn moves_to_json(moves: &[BasePointMove]) -> Value {
    Value::Array(
        moves
            .iter()
            .map(|m| {
                let shifts: Vec<Value> = m.shifts.iter().map(|(k, e)| json!([k.name(), e])).collect();
                json!({ "description": m.description, "shifts": shifts, "var": format!("t{}", m.var + 1) })
            })
            .collect(),
    )
}

/// One line per move: the description, then `generator^exponent` factors.
pub fn moves_to_text(moves: &[BasePointMove]) -> String {
    moves
        .iter()
        .map(|m| {
            let shifts: Vec<String> = m.shifts.iter().map(|(k, e)| format!("{}^{e}", k.name())).collect();
            format!("{}: {}\n", m.description, shifts.join(" "))
        })
        .collect()
}

/// Nonzero generator values and every variable of a dipped augmentation.
pub fn dipped_to_json(d: &DippedAugmentation) -> Value {
    json!({
        "tvalues": value_map(&d.stage.dga.var_names, &d.tvalues, false),
        "values": value_map(&d.stage.dga.gen_names, &d.values, true),
    })
}

/// `name=value` for nonzero generators, then every variable.
pub fn dipped_to_text(d: &DippedAugmentation) -> String {
    let dga = &d.stage.dga;
    dga.gen_names
        .iter()
        .zip(&d.values)
        .filter(|(_, v)| !v.is_zero())
        .chain(dga.var_names.iter().zip(&d.tvalues))
        .map(|(n, v)| format!("{n}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Serializes JSON with sorted keys and a trailing newline.
pub fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}
