//! Parameter grids for verification sweeps.

use std::path::Path;

use crate::error::{Error, Result};
use crate::params::{SumSpec, Variant};

#[derive(Debug, Clone, PartialEq)]
pub struct GridConfig {
    pub nu_values: Vec<f64>,
    pub f_values: Vec<f64>,
    pub x_values: Vec<f64>,
    pub m_min: u32,
    pub m_max: u32,
    pub p_min: u32,
    pub p_max: u32,
    pub signs: Vec<Variant>,
    /// Relative agreement required for a record to pass.
    pub tol: f64,
    /// Truncation tolerance handed to every series.
    pub series_tol: f64,
    pub max_terms: usize,
}

impl Default for GridConfig {
    fn default() -> Self {
        Self {
            nu_values: vec![0.3, 0.5, 1.7],
            f_values: vec![0.7, 2.3],
            x_values: vec![0.1, 0.5, 1.0, 2.0, 5.0],
            m_min: 0,
            m_max: 3,
            p_min: 0,
            p_max: 4,
            signs: Variant::ALL.to_vec(),
            tol: 1e-9,
            series_tol: 1e-14,
            max_terms: 400,
        }
    }
}

fn parse_list<T: std::str::FromStr>(key: &str, value: &str) -> Result<Vec<T>> {
    if value.trim().is_empty() {
        return Ok(Vec::new());
    }
    value
        .split(',')
        .map(|item| {
            item.trim()
                .parse::<T>()
                .map_err(|_| Error::Config(format!("{key}: cannot parse '{}'", item.trim())))
        })
        .collect()
}

fn parse_one<T: std::str::FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .trim()
        .parse::<T>()
        .map_err(|_| Error::Config(format!("{key}: cannot parse '{}'", value.trim())))
}

impl GridConfig {
    /// Parses flat `key = value` text. Lists are comma separated, `#` starts
    /// a comment, and keys that are absent keep their defaults.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = GridConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("line {}: expected key = value", lineno + 1))
            })?;
            let key = key.trim();
            match key {
                "nu_values" | "nu" => cfg.nu_values = parse_list(key, value)?,
                "f_values" | "f" => cfg.f_values = parse_list(key, value)?,
                "x_values" | "x" => cfg.x_values = parse_list(key, value)?,
                "m_min" => cfg.m_min = parse_one(key, value)?,
                "m_max" => cfg.m_max = parse_one(key, value)?,
                "p_min" => cfg.p_min = parse_one(key, value)?,
                "p_max" => cfg.p_max = parse_one(key, value)?,
                "signs" | "variants" => cfg.signs = parse_list(key, value)?,
                "tol" => cfg.tol = parse_one(key, value)?,
                "series_tol" => cfg.series_tol = parse_one(key, value)?,
                "max_terms" => cfg.max_terms = parse_one(key, value)?,
                other => return Err(Error::Config(format!("unknown key '{other}'"))),
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn validate(&self) -> Result<()> {
        let lists = [
            ("nu_values", &self.nu_values),
            ("f_values", &self.f_values),
            ("x_values", &self.x_values),
        ];
        for (name, list) in lists {
            if list.is_empty() {
                return Err(Error::Config(format!("{name} must be non-empty")));
            }
            if list.iter().any(|v| !v.is_finite()) {
                return Err(Error::Config(format!("{name} must contain finite values")));
            }
        }
        if self.signs.is_empty() {
            return Err(Error::Config("signs must be non-empty".into()));
        }
        if self.m_min > self.m_max {
            return Err(Error::Config("m_min must not exceed m_max".into()));
        }
        if self.p_min > self.p_max {
            return Err(Error::Config("p_min must not exceed p_max".into()));
        }
        for (name, t) in [("tol", self.tol), ("series_tol", self.series_tol)] {
            if !(t > 0.0 && t.is_finite()) {
                return Err(Error::Config(format!("{name} must be positive")));
            }
        }
        if self.max_terms == 0 {
            return Err(Error::Config("max_terms must be positive".into()));
        }
        Ok(())
    }

    /// Every grid point, in the output sort order.
    pub fn specs(&self) -> Vec<SumSpec> {
        let mut variants = self.signs.clone();
        variants.sort();
        variants.dedup();
        let mut out = Vec::new();
        for &v in &variants {
            for m in self.m_min..=self.m_max {
                for p in self.p_min..=self.p_max {
                    for &nu in &self.nu_values {
                        for &f in &self.f_values {
                            for &x in &self.x_values {
                                out.push(SumSpec::new(v, m, p, nu, f, x));
                            }
                        }
                    }
                }
            }
        }
        out
    }
}
