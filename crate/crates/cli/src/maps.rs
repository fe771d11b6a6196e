use anyhow::{anyhow, bail, Result};
use rankpath::foata::{flip_valleys, phi, phi_inv, phi_inv_of_partition};
use rankpath::gk::{gamma_inv, gamma_iter};
use rankpath::rank_raising::{f, f_iter, g, theta};
use rankpath::{BoxedPartition, Partition, StepWord};
use serde_json::{json, Value};

pub const MAP_NAMES: &[&str] = &[
    "conj",
    "phi",
    "phi-inv",
    "gamma",
    "gamma-inv",
    "f",
    "g",
    "theta",
    "f-iter",
    "flip-valleys",
    "block-bijection",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Partition(Partition),
    Boxed(BoxedPartition),
    Word(StepWord),
}

/// A JSON array is a partition, a JSON object a boxed partition, and a
/// string (quoted or bare) a step word in `12` or `UD` letters.
pub fn parse_input(s: &str) -> Result<Input> {
    match serde_json::from_str::<Value>(s) {
        Ok(v @ Value::Array(_)) => Ok(Input::Partition(serde_json::from_value(v)?)),
        Ok(v @ Value::Object(_)) => Ok(Input::Boxed(serde_json::from_value(v)?)),
        Ok(Value::String(w)) => Ok(Input::Word(w.parse()?)),
        Ok(other @ (Value::Null | Value::Bool(_))) => bail!("cannot read {other} as a partition or a path"),
        // Bare words, including digit words such as 1212 that read as numbers.
        _ => Ok(Input::Word(s.trim().parse()?)),
    }
}

impl Input {
    pub fn to_json(&self) -> Value {
        match self {
            Input::Partition(p) => serde_json::to_value(p),
            Input::Boxed(b) => serde_json::to_value(b),
            Input::Word(w) => serde_json::to_value(w),
        }
        .expect("serializable")
    }

    pub fn render(&self) -> String {
        match self {
            Input::Partition(p) => p.to_string(),
            Input::Boxed(b) => b.to_string(),
            Input::Word(w) => w.to_string(),
        }
    }

    pub fn stats(&self) -> Value {
        let part = |p: &Partition| {
            json!({
                "area": p.area(),
                "d": p.durfee(),
                "dr": p.durfee_rect(),
                "ranks": p.ranks(),
            })
        };
        match self {
            Input::Partition(p) => part(p),
            Input::Boxed(b) => part(b.partition()),
            Input::Word(w) => {
                let valleys: Vec<[i64; 2]> = w.valleys().iter().map(|v| [v.x as i64, v.h]).collect();
                json!({
                    "des": w.des(),
                    "inv": w.inv(),
                    "maj": w.maj(),
                    "min_height": w.min_height(),
                    "valleys": valleys,
                })
            }
        }
    }
}

pub struct MapOutput {
    pub output: Input,
    pub extra: Option<(&'static str, Value)>,
}

fn word(input: &Input, map: &str) -> Result<StepWord> {
    match input {
        Input::Word(w) => Ok(w.clone()),
        _ => bail!("map {map} expects a path"),
    }
}

fn partition(input: &Input, map: &str) -> Result<Partition> {
    match input {
        Input::Partition(p) => Ok(p.clone()),
        _ => bail!("map {map} expects a partition given as a JSON array"),
    }
}

fn boxed(input: &Input, map: &str) -> Result<BoxedPartition> {
    match input {
        Input::Boxed(b) => Ok(b.clone()),
        _ => bail!("map {map} expects a boxed partition {{\"parts\": [...], \"m\": M, \"n\": N}}"),
    }
}

pub fn apply(map: &str, input: &Input, ell: Option<u32>, k: usize) -> Result<MapOutput> {
    let need_ell = || ell.ok_or_else(|| anyhow!("map {map} needs --ell"));
    let plain = |output| MapOutput { output, extra: None };
    Ok(match map {
        "conj" => plain(match input {
            Input::Partition(p) => Input::Partition(p.conjugate()),
            Input::Boxed(b) => Input::Boxed(b.transpose()),
            Input::Word(_) => bail!("map conj expects a partition"),
        }),
        "phi" => plain(Input::Word(phi(&word(input, map)?))),
        "phi-inv" => plain(Input::Word(match input {
            Input::Boxed(b) => phi_inv_of_partition(b),
            _ => phi_inv(&word(input, map)?),
        })),
        "gamma" => plain(Input::Word(gamma_iter(&word(input, map)?, k)?)),
        "gamma-inv" => {
            let mut w = word(input, map)?;
            for _ in 0..k {
                w = gamma_inv(&w)?;
            }
            plain(Input::Word(w))
        }
        "f" => plain(Input::Partition(f(&partition(input, map)?)?)),
        "g" => plain(Input::Partition(g(&partition(input, map)?)?)),
        "theta" => plain(Input::Boxed(theta(&boxed(input, map)?, need_ell()?)?)),
        "f-iter" => {
            let (out, traj) = f_iter(&boxed(input, map)?, need_ell()?)?;
            MapOutput {
                output: Input::Boxed(out),
                extra: Some(("trajectory", serde_json::to_value(&traj.states)?)),
            }
        }
        "flip-valleys" => plain(Input::Word(flip_valleys(&word(input, map)?))),
        "block-bijection" => plain(Input::Word(word(input, map)?.block_bijection()?)),
        _ => bail!("unknown map `{map}`; known maps: {}", MAP_NAMES.join(", ")),
    })
}
