use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{Context, Result};
use qindset::adversary::{build_gadget, Family};
use qindset::graph::{gen_complete, gen_cycle, gen_path, gen_random, load_dimacs, petersen};
use qindset::Graph;

/// The `--gen` mini-language.
#[derive(Clone, Debug, PartialEq)]
pub enum GenSpec {
    Random { n: usize, p: f64 },
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Gadget(Family, usize),
    Petersen,
}

impl FromStr for GenSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |i: usize| -> std::result::Result<usize, String> {
            parts
                .get(i)
                .ok_or_else(|| format!("`{s}` is missing a size"))?
                .parse()
                .map_err(|_| format!("bad size in `{s}`"))
        };
        let arity = |k: usize| -> std::result::Result<(), String> {
            if parts.len() == k {
                Ok(())
            } else {
                Err(format!("`{s}` has the wrong number of fields"))
            }
        };
        let spec = match parts[0] {
            "random" => {
                arity(3)?;
                let p: f64 = parts[2].parse().map_err(|_| format!("bad density in `{s}`"))?;
                GenSpec::Random { n: num(1)?, p }
            }
            "path" => {
                arity(2)?;
                GenSpec::Path(num(1)?)
            }
            "cycle" => {
                arity(2)?;
                GenSpec::Cycle(num(1)?)
            }
            "complete" => {
                arity(2)?;
                GenSpec::Complete(num(1)?)
            }
            "gadgetA" => {
                arity(2)?;
                GenSpec::Gadget(Family::A, num(1)?)
            }
            "gadgetB" => {
                arity(2)?;
                GenSpec::Gadget(Family::B, num(1)?)
            }
            "petersen" => {
                arity(1)?;
                GenSpec::Petersen
            }
            other => {
                return Err(format!(
                    "unknown generator `{other}` (expected random:<n>:<p>, path:<n>, cycle:<n>, complete:<n>, gadgetA:<n>, gadgetB:<n> or petersen)"
                ))
            }
        };
        Ok(spec)
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenSpec::Random { n, p } => write!(f, "random:{n}:{p}"),
            GenSpec::Path(n) => write!(f, "path:{n}"),
            GenSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GenSpec::Complete(n) => write!(f, "complete:{n}"),
            GenSpec::Gadget(fam, n) => write!(f, "gadget{fam}:{n}"),
            GenSpec::Petersen => write!(f, "petersen"),
        }
    }
}

impl GenSpec {
    pub fn build(&self, seed: u64) -> Result<Graph> {
        Ok(match *self {
            GenSpec::Random { n, p } => gen_random(n, p, seed)?,
            GenSpec::Path(n) => gen_path(n)?,
            GenSpec::Cycle(n) => gen_cycle(n)?,
            GenSpec::Complete(n) => gen_complete(n)?,
            GenSpec::Gadget(fam, n) => build_gadget(fam, n)?.graph,
            GenSpec::Petersen => petersen(),
        })
    }
}

pub enum Source {
    File(PathBuf),
    Gen(GenSpec),
}

impl Source {
    pub fn load(&self, seed: u64) -> Result<(Graph, String)> {
        match self {
            Source::File(path) => {
                let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
                let g = load_dimacs(&text).with_context(|| format!("in {}", path.display()))?;
                Ok((g, format!("file:{}", path.display())))
            }
            Source::Gen(spec) => Ok((spec.build(seed)?, format!("gen:{spec}"))),
        }
    }
}
