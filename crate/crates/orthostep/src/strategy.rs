//! Interchangeable construction strategies behind one trait.
//!
//! Every strategy produces the orthogonal step profile for a period tuple;
//! they differ in how they get there. Strategies are registered by name and
//! selected at runtime, and cross-checking two of them against each other is
//! how the test suite and the `verify` command validate the constructions.

use std::collections::BTreeMap;

use crate::builder::{build, build_by_convolution, StepProfile};
use crate::error::{Error, Result};
use crate::oracle::{minimal_orthogonal, OracleSearch};
use crate::periods::PeriodSet;

/// A way of producing the orthogonal step profile of a period tuple.
pub trait ProfileStrategy: Send + Sync {
    /// Registry key.
    fn name(&self) -> &'static str;

    /// One-line description for help output.
    fn summary(&self) -> &'static str;

    fn build(&self, periods: &[u64]) -> Result<StepProfile>;
}

/// Symmetric product of geometric quotients over all subset gcds.
pub struct ProductFormula;

impl ProfileStrategy for ProductFormula {
    fn name(&self) -> &'static str {
        "product"
    }

    fn summary(&self) -> &'static str {
        "symmetric product of geometric quotients over subset gcds"
    }

    fn build(&self, periods: &[u64]) -> Result<StepProfile> {
        build(periods)
    }
}

/// Convolution chain h₁ → h₂ → h₃ → h₄ with closed-form coefficients.
pub struct ConvolutionChain;

impl ProfileStrategy for ConvolutionChain {
    fn name(&self) -> &'static str {
        "chain"
    }

    fn summary(&self) -> &'static str {
        "convolution chain with closed-form coefficient sequences"
    }

    fn build(&self, periods: &[u64]) -> Result<StepProfile> {
        build_by_convolution(periods)
    }
}

/// Brute-force scan for the shortest nontrivial exact nullspace vector.
pub struct NullspaceOracle {
    /// Scan bound in normalized units; when absent, the sum of the normalized
    /// periods is used, which always suffices.
    pub l_max: Option<u64>,
}

impl NullspaceOracle {
    pub fn new() -> Self {
        NullspaceOracle { l_max: None }
    }
}

impl Default for NullspaceOracle {
    fn default() -> Self {
        Self::new()
    }
}

impl ProfileStrategy for NullspaceOracle {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn summary(&self) -> &'static str {
        "brute-force minimal-length exact nullspace search"
    }

    fn build(&self, periods: &[u64]) -> Result<StepProfile> {
        let pset = PeriodSet::new(periods)?;
        let l_max = self.l_max.unwrap_or_else(|| pset.normalized().iter().sum());
        match minimal_orthogonal(&pset, l_max)? {
            OracleSearch::Found(sol) => StepProfile::from_values(pset, sol.profile),
            OracleSearch::NotFoundBelow { l_max } => Err(Error::Internal(format!(
                "no nontrivial profile below length {l_max}"
            ))),
        }
    }
}

/// Name-keyed registry of profile strategies.
pub struct StrategyRegistry {
    entries: BTreeMap<&'static str, Box<dyn ProfileStrategy>>,
}

impl StrategyRegistry {
    pub fn empty() -> Self {
        StrategyRegistry {
            entries: BTreeMap::new(),
        }
    }

    /// The built-in strategies: product, chain and oracle.
    pub fn with_defaults() -> Self {
        let mut registry = Self::empty();
        registry.register(Box::new(ProductFormula));
        registry.register(Box::new(ConvolutionChain));
        registry.register(Box::new(NullspaceOracle::new()));
        registry
    }

    pub fn register(&mut self, strategy: Box<dyn ProfileStrategy>) {
        self.entries.insert(strategy.name(), strategy);
    }

    pub fn get(&self, name: &str) -> Option<&dyn ProfileStrategy> {
        self.entries.get(name).map(AsRef::as_ref)
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn ProfileStrategy> {
        self.entries.values().map(AsRef::as_ref)
    }
}

impl Default for StrategyRegistry {
    fn default() -> Self {
        Self::with_defaults()
    }
}
