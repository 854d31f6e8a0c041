//! Plain `key = value` configuration files.
//!
//! ```text
//! # P0
//! p = 2
//! r = 2
//! ell = 2
//! n = 1
//! t = 1
//! eta = xi^1
//! theta = xi^1
//! Z = xi^0, xi^2
//! f = linear:1
//! seed = 7
//! ```
//!
//! Teichmuller lists are comma separated `0` or `xi^j` items. `f` is either
//! `linear:c_0,c_1,...` (integers or `xi^j`) or `table:e;e;...` with values in
//! `alpha_b` order.

use std::path::Path;

use thiserror::Error;

use super::{CodeSpec, CoeffSpec, MapSpec, TeichSpec};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing required key `{0}`")]
    Missing(&'static str),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn parse_teich(item: &str) -> Option<TeichSpec> {
    let item = item.trim();
    if item == "0" {
        return Some(TeichSpec::Zero);
    }
    let j = item.strip_prefix("xi^")?.trim().parse().ok()?;
    Some(TeichSpec::Power(j))
}

fn parse_teich_list(value: &str) -> Option<Vec<TeichSpec>> {
    if value.trim().is_empty() {
        return Some(Vec::new());
    }
    value.split(',').map(parse_teich).collect()
}

fn parse_map(value: &str) -> Option<MapSpec> {
    let value = value.trim();
    if let Some(rest) = value.strip_prefix("linear:") {
        let coeffs = rest
            .split(',')
            .map(|c| {
                let c = c.trim();
                match c.parse::<i64>() {
                    Ok(v) => Some(CoeffSpec::Int(v)),
                    Err(_) => parse_teich(c).map(CoeffSpec::Teich),
                }
            })
            .collect::<Option<Vec<_>>>()?;
        Some(MapSpec::Linear(coeffs))
    } else {
        let rest = value.strip_prefix("table:")?;
        Some(MapSpec::Table(
            rest.split(';').map(|s| s.trim().to_string()).collect(),
        ))
    }
}

pub fn parse_config(text: &str) -> Result<CodeSpec, ConfigError> {
    let mut p = None;
    let mut r = None;
    let mut ell = None;
    let mut n = None;
    let mut t = None;
    let mut spec = CodeSpec::new(0, 0, 0, 0, 0);
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |msg: String| ConfigError::Syntax { line, msg };
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| err(format!("expected key = value, got `{content}`")))?;
        let (key, value) = (key.trim(), value.trim());
        let int = |v: &str| {
            v.parse::<u32>()
                .map_err(|_| err(format!("`{key}` needs an integer, got `{v}`")))
        };
        let teich =
            |v: &str| parse_teich_list(v).ok_or_else(|| err(format!("bad Teichmuller list `{v}`")));
        match key {
            "p" => p = Some(int(value)?),
            "r" => r = Some(int(value)?),
            "ell" => ell = Some(int(value)?),
            "n" => n = Some(int(value)?),
            "t" => t = Some(int(value)?),
            "eta" => spec.eta = Some(teich(value)?),
            "theta" => spec.theta = Some(teich(value)?),
            "Z" => spec.zeta = Some(teich(value)?),
            "f" => {
                spec.f = Some(parse_map(value).ok_or_else(|| err(format!("bad map `{value}`")))?)
            }
            "seed" => {
                spec.seed = value
                    .parse()
                    .map_err(|_| err(format!("`seed` needs an integer, got `{value}`")))?
            }
            other => return Err(err(format!("unknown key `{other}`"))),
        }
    }
    spec.p = p.ok_or(ConfigError::Missing("p"))?;
    spec.r = r.ok_or(ConfigError::Missing("r"))?;
    spec.ell = ell.ok_or(ConfigError::Missing("ell"))?;
    spec.n = n.unwrap_or(1);
    spec.t = t.unwrap_or(1);
    Ok(spec)
}

pub fn load_config(path: &Path) -> Result<CodeSpec, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_config(&text)
}

/// Inverse of [`parse_config`] for the fields that are set.
pub fn render_config(spec: &CodeSpec) -> String {
    let list = |v: &[TeichSpec]| {
        v.iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    let mut out = format!(
        "p = {}\nr = {}\nell = {}\nn = {}\nt = {}\n",
        spec.p, spec.r, spec.ell, spec.n, spec.t
    );
    if let Some(v) = &spec.eta {
        out += &format!("eta = {}\n", list(v));
    }
    if let Some(v) = &spec.theta {
        out += &format!("theta = {}\n", list(v));
    }
    if let Some(v) = &spec.zeta {
        out += &format!("Z = {}\n", list(v));
    }
    match &spec.f {
        Some(MapSpec::Linear(c)) => {
            let items: Vec<String> = c
                .iter()
                .map(|c| match c {
                    CoeffSpec::Int(v) => v.to_string(),
                    CoeffSpec::Teich(t) => t.to_string(),
                })
                .collect();
            out += &format!("f = linear:{}\n", items.join(","));
        }
        Some(MapSpec::Table(v)) => out += &format!("f = table:{}\n", v.join(";")),
        None => {}
    }
    out += &format!("seed = {}\n", spec.seed);
    out
}
