//! Flat key-value experiment configs.
//!
//! The format is one `key = value` pair per line, `#` comments, no
//! nesting. Lists are comma-separated. Every key is validated before any
//! computation runs; unknown keys are errors. The canonical serialization
//! (typed values re-printed, keys sorted) is what gets hashed, so
//! whitespace and key order never change a run's identity.

use std::collections::BTreeMap;
use std::fmt;

use glab::decomp::SkewPolicy;
use glab::lcs::uniform_dist;
use glab::shape::Direction;
use glab::PathMode;

use crate::digest::fnv1a64_hex;
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Dlpp,
    Dfpp,
    Lcs,
}

impl Model {
    pub fn label(self) -> &'static str {
        match self {
            Model::Dlpp => "dlpp",
            Model::Dfpp => "dfpp",
            Model::Lcs => "lcs",
        }
    }

    pub fn mode(self) -> CliResult<PathMode> {
        match self {
            Model::Dlpp => Ok(PathMode::LastPassage),
            Model::Dfpp => Ok(PathMode::FirstPassage),
            Model::Lcs => Err(CliError::InvalidConfig(
                "model lcs has no passage mode; use a passage model".into(),
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Experiment {
    ShapePoint {
        direction: Direction,
        n: u32,
        s: f64,
    },
    ShapeCurvature {
        q_list: Vec<f64>,
        n: u32,
        s: f64,
        q_window: (f64, f64),
    },
    Convergence {
        n_list: Vec<u32>,
        s: f64,
    },
    EventA {
        n_list: Vec<u32>,
        k_list: Vec<u32>,
        s: f64,
        policy: SkewPolicy,
        dump_fields: bool,
    },
    DeviationProfile {
        n_list: Vec<u32>,
        s: f64,
    },
    XiFit {
        n_list: Vec<u32>,
        s: f64,
        quantile: f64,
    },
    Containment {
        n: u32,
        s: f64,
        width: u32,
    },
    LcsProfile {
        len_list: Vec<u32>,
        alphabet_size: u32,
        dist: Vec<f64>,
    },
    OracleSuite {
        seeds: u32,
    },
    ResampleSuite {
        trials: u32,
    },
    PartitionSuite {
        instances: u32,
    },
}

impl Experiment {
    pub fn name(&self) -> &'static str {
        match self {
            Experiment::ShapePoint { .. } => "shape-point",
            Experiment::ShapeCurvature { .. } => "shape-curvature",
            Experiment::Convergence { .. } => "convergence",
            Experiment::EventA { .. } => "event-a",
            Experiment::DeviationProfile { .. } => "deviation-profile",
            Experiment::XiFit { .. } => "xi-fit",
            Experiment::Containment { .. } => "containment",
            Experiment::LcsProfile { .. } => "lcs-profile",
            Experiment::OracleSuite { .. } => "oracle-suite",
            Experiment::ResampleSuite { .. } => "resample-suite",
            Experiment::PartitionSuite { .. } => "partition-suite",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub experiment: Experiment,
    pub model: Model,
    pub reps: u32,
    pub master_seed: u64,
    pub output_dir: Option<String>,
    pub workers: Option<usize>,
}

impl ExperimentConfig {
    /// Parse and validate a config file's text. `seed_override` (from the
    /// environment) replaces `master_seed` before anything is hashed.
    pub fn parse(text: &str, seed_override: Option<u64>) -> CliResult<Self> {
        let mut pairs = Pairs::parse(text)?;
        let experiment_name = pairs.take_req("experiment")?;
        let model = match pairs.take_opt("model")?.as_deref() {
            None => Model::Dlpp,
            Some("dlpp") => Model::Dlpp,
            Some("dfpp") => Model::Dfpp,
            Some("lcs") => Model::Lcs,
            Some(other) => {
                return Err(CliError::InvalidConfig(format!(
                    "unknown model {other:?} (want dlpp, dfpp, or lcs)"
                )))
            }
        };
        let reps = pairs.take_opt_u32("reps")?.unwrap_or(2);
        let master_seed = match seed_override {
            Some(seed) => {
                pairs.take_opt_u64("master_seed")?; // consumed, overridden
                seed
            }
            None => pairs.take_opt_u64("master_seed")?.unwrap_or(0),
        };
        let output_dir = pairs.take_opt("output_dir")?;
        let workers = pairs.take_opt_u32("workers")?.map(|w| w as usize);

        let experiment = match experiment_name.as_str() {
            "shape-point" => {
                let direction = pairs.take_direction()?;
                Experiment::ShapePoint {
                    direction,
                    n: pairs.take_req_u32("n")?,
                    s: pairs.take_req_f64("s")?,
                }
            }
            "shape-curvature" => Experiment::ShapeCurvature {
                q_list: pairs.take_req_f64_list("q_list")?,
                n: pairs.take_req_u32("n")?,
                s: pairs.take_req_f64("s")?,
                q_window: (
                    pairs.take_opt_f64("q_window_lo")?.unwrap_or(0.01),
                    pairs.take_opt_f64("q_window_hi")?.unwrap_or(0.6),
                ),
            },
            "convergence" => Experiment::Convergence {
                n_list: pairs.take_req_u32_list("n_list")?,
                s: pairs.take_req_f64("s")?,
            },
            "event-a" => {
                let n_list = pairs.take_req_u32_list("n_list")?;
                let k_list = pairs.take_req_u32_list("k_list")?;
                if n_list.len() != k_list.len() {
                    return Err(CliError::InvalidConfig(format!(
                        "n_list has {} entries but k_list has {}",
                        n_list.len(),
                        k_list.len()
                    )));
                }
                for (&n, &k) in n_list.iter().zip(&k_list) {
                    if k == 0 || n % k != 0 {
                        return Err(CliError::InvalidConfig(format!(
                            "block width {k} must divide n = {n}"
                        )));
                    }
                }
                Experiment::EventA {
                    n_list,
                    k_list,
                    s: pairs.take_req_f64("s")?,
                    policy: SkewPolicy::new(
                        pairs.take_req_f64("eta")?,
                        pairs.take_req_f64("p1")?,
                        pairs.take_req_f64("p2")?,
                    )
                    .map_err(|e| CliError::InvalidConfig(e.to_string()))?,
                    dump_fields: pairs.take_opt_bool("dump_fields")?.unwrap_or(false),
                }
            }
            "deviation-profile" => Experiment::DeviationProfile {
                n_list: pairs.take_req_u32_list("n_list")?,
                s: pairs.take_req_f64("s")?,
            },
            "xi-fit" => Experiment::XiFit {
                n_list: pairs.take_req_u32_list("n_list")?,
                s: pairs.take_req_f64("s")?,
                quantile: pairs.take_opt_f64("quantile")?.unwrap_or(0.5),
            },
            "containment" => Experiment::Containment {
                n: pairs.take_req_u32("n")?,
                s: pairs.take_req_f64("s")?,
                width: pairs.take_req_u32("width")?,
            },
            "lcs-profile" => {
                let alphabet_size = pairs.take_req_u32("alphabet_size")?;
                let dist = match pairs.take_opt_f64_list("dist")? {
                    Some(d) => d,
                    None => uniform_dist(alphabet_size),
                };
                Experiment::LcsProfile {
                    len_list: pairs.take_req_u32_list("len_list")?,
                    alphabet_size,
                    dist,
                }
            }
            "oracle-suite" => Experiment::OracleSuite {
                seeds: pairs.take_opt_u32("seeds")?.unwrap_or(1000),
            },
            "resample-suite" => Experiment::ResampleSuite {
                trials: pairs.take_opt_u32("trials")?.unwrap_or(10_000),
            },
            "partition-suite" => Experiment::PartitionSuite {
                instances: pairs.take_opt_u32("instances")?.unwrap_or(500),
            },
            other => {
                return Err(CliError::InvalidConfig(format!(
                    "unknown experiment {other:?}"
                )))
            }
        };

        pairs.finish()?;

        if let Some(s) = match &experiment {
            Experiment::ShapePoint { s, .. }
            | Experiment::ShapeCurvature { s, .. }
            | Experiment::Convergence { s, .. }
            | Experiment::EventA { s, .. }
            | Experiment::DeviationProfile { s, .. }
            | Experiment::XiFit { s, .. }
            | Experiment::Containment { s, .. } => Some(*s),
            _ => None,
        } {
            if !(s > 0.0 && s < 1.0) {
                return Err(CliError::InvalidConfig(format!(
                    "Bernoulli parameter s must lie in (0,1), got {s}"
                )));
            }
        }

        let config = ExperimentConfig {
            experiment,
            model,
            reps,
            master_seed,
            output_dir,
            workers,
        };
        config.validate_model()?;
        Ok(config)
    }

    fn validate_model(&self) -> CliResult<()> {
        let is_lcs_exp = matches!(self.experiment, Experiment::LcsProfile { .. });
        match (is_lcs_exp, self.model) {
            (true, Model::Lcs) | (false, Model::Dlpp) | (false, Model::Dfpp) => Ok(()),
            (true, m) => Err(CliError::InvalidConfig(format!(
                "lcs-profile requires model = lcs, got {}",
                m.label()
            ))),
            (false, Model::Lcs) => {
                match self.experiment {
                    // Suites ignore the model; allow the default only.
                    Experiment::OracleSuite { .. }
                    | Experiment::ResampleSuite { .. }
                    | Experiment::PartitionSuite { .. } => Ok(()),
                    _ => Err(CliError::InvalidConfig(format!(
                        "experiment {} is a passage experiment; model lcs is invalid",
                        self.experiment.name()
                    ))),
                }
            }
        }
    }

    pub fn mode(&self) -> CliResult<PathMode> {
        self.model.mode()
    }

    /// Typed values re-serialized with sorted keys: the hashing identity.
    pub fn canonical_pairs(&self) -> Vec<(String, String)> {
        let mut pairs: Vec<(String, String)> = vec![
            ("experiment".into(), self.experiment.name().into()),
            ("model".into(), self.model.label().into()),
            ("reps".into(), self.reps.to_string()),
            ("master_seed".into(), self.master_seed.to_string()),
        ];
        let list = |v: &[u32]| {
            v.iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        let flist = |v: &[f64]| {
            v.iter()
                .map(f64::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        match &self.experiment {
            Experiment::ShapePoint { direction, n, s } => {
                pairs.push((direction.kind().into(), direction.value_label()));
                pairs.push(("n".into(), n.to_string()));
                pairs.push(("s".into(), s.to_string()));
            }
            Experiment::ShapeCurvature {
                q_list,
                n,
                s,
                q_window,
            } => {
                pairs.push(("q_list".into(), flist(q_list)));
                pairs.push(("n".into(), n.to_string()));
                pairs.push(("s".into(), s.to_string()));
                pairs.push(("q_window_lo".into(), q_window.0.to_string()));
                pairs.push(("q_window_hi".into(), q_window.1.to_string()));
            }
            Experiment::Convergence { n_list, s } => {
                pairs.push(("n_list".into(), list(n_list)));
                pairs.push(("s".into(), s.to_string()));
            }
            Experiment::EventA {
                n_list,
                k_list,
                s,
                policy,
                dump_fields,
            } => {
                pairs.push(("n_list".into(), list(n_list)));
                pairs.push(("k_list".into(), list(k_list)));
                pairs.push(("s".into(), s.to_string()));
                pairs.push(("eta".into(), policy.eta.to_string()));
                pairs.push(("p1".into(), policy.p1.to_string()));
                pairs.push(("p2".into(), policy.p2.to_string()));
                pairs.push(("dump_fields".into(), dump_fields.to_string()));
            }
            Experiment::DeviationProfile { n_list, s } => {
                pairs.push(("n_list".into(), list(n_list)));
                pairs.push(("s".into(), s.to_string()));
            }
            Experiment::XiFit { n_list, s, quantile } => {
                pairs.push(("n_list".into(), list(n_list)));
                pairs.push(("s".into(), s.to_string()));
                pairs.push(("quantile".into(), quantile.to_string()));
            }
            Experiment::Containment { n, s, width } => {
                pairs.push(("n".into(), n.to_string()));
                pairs.push(("s".into(), s.to_string()));
                pairs.push(("width".into(), width.to_string()));
            }
            Experiment::LcsProfile {
                len_list,
                alphabet_size,
                dist,
            } => {
                pairs.push(("len_list".into(), list(len_list)));
                pairs.push(("alphabet_size".into(), alphabet_size.to_string()));
                pairs.push(("dist".into(), flist(dist)));
            }
            Experiment::OracleSuite { seeds } => {
                pairs.push(("seeds".into(), seeds.to_string()));
            }
            Experiment::ResampleSuite { trials } => {
                pairs.push(("trials".into(), trials.to_string()));
            }
            Experiment::PartitionSuite { instances } => {
                pairs.push(("instances".into(), instances.to_string()));
            }
        }
        pairs.sort();
        pairs
    }

    pub fn canonical_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.canonical_pairs() {
            out.push_str(&format!("{k} = {v}\n"));
        }
        out
    }

    /// Stable identity of the run: digest of the canonical serialization.
    pub fn hash(&self) -> String {
        fnv1a64_hex(self.canonical_text().as_bytes())
    }
}

impl fmt::Display for ExperimentConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_text())
    }
}

/// Raw parsed key-value pairs with take-and-check-empty semantics.
struct Pairs {
    map: BTreeMap<String, String>,
}

impl Pairs {
    fn parse(text: &str) -> CliResult<Self> {
        let mut map = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::InvalidConfig(format!(
                    "line {}: expected `key = value`, got {line:?}",
                    lineno + 1
                )));
            };
            let key = key.trim().to_string();
            let value = value.trim().to_string();
            if map.insert(key.clone(), value).is_some() {
                return Err(CliError::InvalidConfig(format!(
                    "duplicate key {key:?} (line {})",
                    lineno + 1
                )));
            }
        }
        Ok(Pairs { map })
    }

    fn take_opt(&mut self, key: &str) -> CliResult<Option<String>> {
        Ok(self.map.remove(key))
    }

    fn take_req(&mut self, key: &str) -> CliResult<String> {
        self.map
            .remove(key)
            .ok_or_else(|| CliError::InvalidConfig(format!("missing required key {key:?}")))
    }

    fn parse_num<T: std::str::FromStr>(key: &str, v: &str) -> CliResult<T>
    where
        T::Err: fmt::Display,
    {
        v.parse()
            .map_err(|e| CliError::InvalidConfig(format!("key {key:?}: bad value {v:?}: {e}")))
    }

    fn take_req_u32(&mut self, key: &str) -> CliResult<u32> {
        let v = self.take_req(key)?;
        Self::parse_num(key, &v)
    }

    fn take_req_f64(&mut self, key: &str) -> CliResult<f64> {
        let v = self.take_req(key)?;
        Self::parse_num(key, &v)
    }

    fn take_opt_u32(&mut self, key: &str) -> CliResult<Option<u32>> {
        self.take_opt(key)?
            .map(|v| Self::parse_num(key, &v))
            .transpose()
    }

    fn take_opt_u64(&mut self, key: &str) -> CliResult<Option<u64>> {
        self.take_opt(key)?
            .map(|v| Self::parse_num(key, &v))
            .transpose()
    }

    fn take_opt_f64(&mut self, key: &str) -> CliResult<Option<f64>> {
        self.take_opt(key)?
            .map(|v| Self::parse_num(key, &v))
            .transpose()
    }

    fn take_opt_bool(&mut self, key: &str) -> CliResult<Option<bool>> {
        self.take_opt(key)?
            .map(|v| match v.as_str() {
                "true" => Ok(true),
                "false" => Ok(false),
                other => Err(CliError::InvalidConfig(format!(
                    "key {key:?}: want true or false, got {other:?}"
                ))),
            })
            .transpose()
    }

    fn take_req_u32_list(&mut self, key: &str) -> CliResult<Vec<u32>> {
        let v = self.take_req(key)?;
        v.split(',')
            .map(|item| Self::parse_num(key, item.trim()))
            .collect()
    }

    fn take_req_f64_list(&mut self, key: &str) -> CliResult<Vec<f64>> {
        let v = self.take_req(key)?;
        v.split(',')
            .map(|item| Self::parse_num(key, item.trim()))
            .collect()
    }

    fn take_opt_f64_list(&mut self, key: &str) -> CliResult<Option<Vec<f64>>> {
        match self.take_opt(key)? {
            None => Ok(None),
            Some(v) => v
                .split(',')
                .map(|item| Self::parse_num(key, item.trim()))
                .collect::<CliResult<Vec<f64>>>()
                .map(Some),
        }
    }

    /// Exactly one of `q`, `p`, `xy` must be present.
    fn take_direction(&mut self) -> CliResult<Direction> {
        let q = self.take_opt("q")?;
        let p = self.take_opt("p")?;
        let xy = self.take_opt("xy")?;
        let given = [q.is_some(), p.is_some(), xy.is_some()]
            .iter()
            .filter(|b| **b)
            .count();
        if given != 1 {
            return Err(CliError::InvalidConfig(
                "shape-point needs exactly one of q, p, xy".into(),
            ));
        }
        let (kind, value) = if let Some(v) = q {
            ("q", v)
        } else if let Some(v) = p {
            ("p", v)
        } else {
            ("xy", xy.unwrap())
        };
        Direction::parse(kind, &value).map_err(|e| CliError::InvalidConfig(e.to_string()))
    }

    fn finish(self) -> CliResult<()> {
        if let Some(key) = self.map.keys().next() {
            return Err(CliError::InvalidConfig(format!("unknown key {key:?}")));
        }
        Ok(())
    }
}
