//! Problem descriptions read from JSON.

use serde::{Deserialize, Serialize};

use orelab_core::simplicity::{Caps, DEFAULT_BRUTE_FORCE_CAP, DEFAULT_WEIGHT_CAP, DEFAULT_WITNESS_CAP};
use orelab_core::{
    addmap::DEFAULT_ORBIT_BOUND, AddMap, Algebra, BaseRing, BaseTag, DeltaFamily, MonoidElem, MonoidSpec, PiStructure,
    Rationals, Residues,
};

use crate::CliError;

/// A scalar written either as a JSON integer or as a string such as `"-3/4"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    fn parse<B: BaseRing>(&self, base: &B) -> Result<B::Elem, CliError> {
        match self {
            Scalar::Int(n) => Ok(base.from_i64(*n)),
            Scalar::Text(s) => Ok(base.parse(s)?),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemConfig {
    pub algebra: AlgebraConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monoid: Option<MonoidConfig>,
    pub pi: PiConfig,
    #[serde(default)]
    pub analysis: AnalysisConfig,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraConfig {
    /// `"Q"`, `"Fp:<p>"` or `"Zn:<n>"`.
    pub base: String,
    pub dim: usize,
    /// `structure_constants[i][j]` holds the coordinates of `e_i e_j`.
    pub structure_constants: Vec<Vec<Vec<Scalar>>>,
    pub unit: Vec<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MonoidConfig {
    Free {
        free_commutative: usize,
    },
    Finite {
        size: usize,
        identity: usize,
        cayley: Vec<Vec<usize>>,
        /// Well-order as a list of indices, smallest first; defaults to
        /// `0, 1, …, size-1`.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        order: Option<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
}

/// A monoid element given by index or by name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemRef {
    Index(usize),
    Name(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    pub a: ElemRef,
    pub b: ElemRef,
    /// Row-major; column `j` is the image of `e_j`.
    pub matrix: Vec<Vec<Scalar>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeltaConfig {
    pub deltas: Vec<Vec<Vec<Scalar>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PiConfig {
    Table(Vec<TableEntry>),
    DeltaGenerated(DeltaConfig),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Auto,
    Brute,
    Theorem,
    Witness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisConfig {
    #[serde(default = "default_weight_cap")]
    pub weight_cap: u64,
    #[serde(default = "default_orbit_bound")]
    pub orbit_bound: usize,
    #[serde(default = "default_brute_force_cap")]
    pub brute_force_cap: u64,
    #[serde(default = "default_witness_cap")]
    pub witness_cap: u64,
    #[serde(default = "default_strategy")]
    pub strategy: Strategy,
}

fn default_weight_cap() -> u64 {
    DEFAULT_WEIGHT_CAP
}

fn default_orbit_bound() -> usize {
    DEFAULT_ORBIT_BOUND
}

fn default_brute_force_cap() -> u64 {
    DEFAULT_BRUTE_FORCE_CAP
}

fn default_witness_cap() -> u64 {
    DEFAULT_WITNESS_CAP
}

fn default_strategy() -> Strategy {
    Strategy::Auto
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        Self {
            weight_cap: DEFAULT_WEIGHT_CAP,
            orbit_bound: DEFAULT_ORBIT_BOUND,
            brute_force_cap: DEFAULT_BRUTE_FORCE_CAP,
            witness_cap: DEFAULT_WITNESS_CAP,
            strategy: Strategy::Auto,
        }
    }
}

impl AnalysisConfig {
    pub fn caps(&self) -> Caps {
        Caps {
            weight: self.weight_cap,
            orbit_bound: self.orbit_bound,
            brute_force: self.brute_force_cap,
            witness: self.witness_cap,
        }
    }
}

impl ProblemConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let config: Self = serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        config.algebra.base.parse::<BaseTag>()?;
        Ok(config)
    }

    pub fn from_file(path: &std::path::Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Builds the π-structure over the configured base.
    pub fn build(&self) -> Result<AnyProblem, CliError> {
        Ok(match self.algebra.base.parse::<BaseTag>()? {
            BaseTag::Rational => AnyProblem::Rational(self.build_over(Rationals::new())?),
            BaseTag::Prime(p) => AnyProblem::Residue(self.build_over(Residues::prime_field(p)?)?),
            BaseTag::Modular(n) => AnyProblem::Residue(self.build_over(Residues::integers_mod(n)?)?),
        })
    }

    fn build_over<B: BaseRing>(&self, base: B) -> Result<PiStructure<B>, CliError> {
        let alg = self.build_algebra(base)?;
        match &self.pi {
            PiConfig::Table(entries) => {
                let monoid = self.build_monoid()?.ok_or_else(|| {
                    CliError::Config("a table π-structure needs a monoid section".to_string())
                })?;
                let mut parsed = Vec::new();
                for (k, entry) in entries.iter().enumerate() {
                    let a = elem_ref(&monoid, &entry.a)?;
                    let b = elem_ref(&monoid, &entry.b)?;
                    let m = matrix(&alg, &entry.matrix).map_err(|e| CliError::Config(format!("pi.table[{k}]: {e}")))?;
                    parsed.push((a, b, m));
                }
                Ok(PiStructure::table(alg, monoid, parsed)?)
            }
            PiConfig::DeltaGenerated(cfg) => {
                if let Some(MonoidSpec::Free { arity }) = self.build_monoid()? {
                    if arity != cfg.deltas.len() {
                        return Err(CliError::Config(format!(
                            "monoid has {arity} generators but {} deltas are given",
                            cfg.deltas.len()
                        )));
                    }
                } else if self.monoid.is_some() {
                    return Err(CliError::Config("a delta-generated π needs a free commutative monoid".to_string()));
                }
                let mut maps = Vec::new();
                for (k, d) in cfg.deltas.iter().enumerate() {
                    maps.push(matrix(&alg, d).map_err(|e| CliError::Config(format!("pi.delta_generated.deltas[{k}]: {e}")))?);
                }
                Ok(PiStructure::delta_generated(DeltaFamily::new(alg, maps)?))
            }
        }
    }

    fn build_algebra<B: BaseRing>(&self, base: B) -> Result<Algebra<B>, CliError> {
        let cfg = &self.algebra;
        let d = cfg.dim;
        let field = |what: String| CliError::Config(format!("algebra.structure_constants{what}"));
        if cfg.structure_constants.len() != d {
            return Err(field(format!(": expected {d} rows, found {}", cfg.structure_constants.len())));
        }
        let mut constants = Vec::with_capacity(d * d * d);
        for (i, row) in cfg.structure_constants.iter().enumerate() {
            if row.len() != d {
                return Err(field(format!("[{i}]: expected {d} entries, found {}", row.len())));
            }
            for (j, v) in row.iter().enumerate() {
                if v.len() != d {
                    return Err(field(format!("[{i}][{j}]: expected {d} coordinates, found {}", v.len())));
                }
                for c in v {
                    constants.push(c.parse(&base)?);
                }
            }
        }
        let unit = cfg.unit.iter().map(|c| c.parse(&base)).collect::<Result<Vec<_>, _>>()?;
        let alg = Algebra::new(base, d, constants, unit)?;
        Ok(match &cfg.basis_names {
            Some(names) => alg.with_basis_names(names.clone())?,
            None => alg,
        })
    }

    fn build_monoid(&self) -> Result<Option<MonoidSpec>, CliError> {
        Ok(match &self.monoid {
            None => None,
            Some(MonoidConfig::Free { free_commutative }) => Some(MonoidSpec::free(*free_commutative)),
            Some(MonoidConfig::Finite { size, identity, cayley, order, names }) => {
                if cayley.len() != *size {
                    return Err(CliError::Config(format!(
                        "monoid.cayley: expected {size} rows, found {}",
                        cayley.len()
                    )));
                }
                let order = order.clone().unwrap_or_else(|| (0..*size).collect());
                Some(MonoidSpec::finite(*identity, cayley.clone(), order, names.clone())?)
            }
        })
    }
}

fn elem_ref(monoid: &MonoidSpec, r: &ElemRef) -> Result<MonoidElem, CliError> {
    Ok(match r {
        ElemRef::Index(i) => monoid.parse_elem(&i.to_string())?,
        ElemRef::Name(s) => monoid.parse_elem(s)?,
    })
}

fn matrix<B: BaseRing>(alg: &Algebra<B>, rows: &[Vec<Scalar>]) -> Result<AddMap<B::Elem>, CliError> {
    let base = alg.base();
    let m = rows
        .iter()
        .map(|r| r.iter().map(|c| c.parse(base)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AddMap::from_matrix(alg, m)?)
}

/// A π-structure over one of the supported bases.
#[derive(Debug, Clone)]
pub enum AnyProblem {
    Rational(PiStructure<Rationals>),
    Residue(PiStructure<Residues>),
}
