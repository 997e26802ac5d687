//! Closed forms for edge ideals of cycles and paths, and the survey that checks them
//! against the homological engine.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::Engine;

/// Cycle lengths `n` for which `R/I(C_n)` is almost Cohen-Macaulay.
pub const ALMOST_CM_CYCLES: [usize; 8] = [3, 4, 5, 6, 7, 8, 9, 11];

pub const DEFAULT_HOMOLOGY_LIMIT: usize = 12;

fn at_least(what: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::TooSmall { what, n, min });
    }
    Ok(())
}

/// `depth R/I(C_n) = ⌈(n-1)/3⌉`.
pub fn cycle_depth_formula(n: usize) -> Result<usize> {
    at_least("cycle depth", n, 3)?;
    Ok((n - 1).div_ceil(3))
}

/// `dim R/I(C_n) = ⌊n/2⌋`.
pub fn cycle_dim_formula(n: usize) -> Result<usize> {
    at_least("cycle dimension", n, 3)?;
    Ok(n / 2)
}

/// `dim R/I(P_n)` for the path on `n` vertices, which is its independence number `⌈n/2⌉`.
///
/// This is `⌊n/2⌋` only for even `n`; the path `x1 - x2 - x3` already has the independent
/// set `{x1, x3}`.
pub fn path_dim_formula(n: usize) -> Result<usize> {
    at_least("path dimension", n, 1)?;
    Ok(n.div_ceil(2))
}

/// Membership in [`ALMOST_CM_CYCLES`], cross-checked against `depth >= dim - 1`.
pub fn cycle_almost_cm(n: usize) -> Result<bool> {
    at_least("cycle almost-CM", n, 3)?;
    let listed = ALMOST_CM_CYCLES.contains(&n);
    let by_formula = cycle_depth_formula(n)? + 1 >= cycle_dim_formula(n)?;
    if listed != by_formula {
        return Err(Error::OracleDisagreement(format!(
            "n = {n}: listed {listed}, depth/dim inequality {by_formula}"
        )));
    }
    Ok(listed)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleReport {
    pub n: usize,
    pub dim_formula: usize,
    pub depth_formula: usize,
    pub dim_computed: Option<usize>,
    pub depth_computed: Option<usize>,
    pub almost_cm_formula: bool,
    pub almost_cm_computed: Option<bool>,
    pub cm_formula: bool,
}

impl CycleReport {
    pub fn agrees(&self) -> bool {
        self.dim_computed.is_none_or(|d| d == self.dim_formula)
            && self.depth_computed.is_none_or(|d| d == self.depth_formula)
            && self.almost_cm_computed.is_none_or(|a| a == self.almost_cm_formula)
    }
}

fn cycle_row(n: usize, engine: &Engine, homology_limit: usize) -> Result<CycleReport> {
    let dim_formula = cycle_dim_formula(n)?;
    let depth_formula = cycle_depth_formula(n)?;
    let almost_cm_formula = cycle_almost_cm(n)?;
    let (dim_computed, depth_computed, almost_cm_computed) = if n <= homology_limit {
        let g = Graph::cycle_graph(n)?;
        let dim = g.independence_number()?;
        let ind = g.independence_complex()?;
        let depth = engine.depth(&ind)?;
        if ind.d() != dim {
            return Err(Error::OracleDisagreement(format!(
                "C_{n}: complex dimension {} vs independence number {dim}",
                ind.d()
            )));
        }
        (Some(dim), Some(depth), Some(depth + 1 >= dim))
    } else {
        (None, None, None)
    };
    Ok(CycleReport {
        n,
        dim_formula,
        depth_formula,
        dim_computed,
        depth_computed,
        almost_cm_formula,
        almost_cm_computed,
        cm_formula: depth_formula == dim_formula,
    })
}

/// One row per `n` in `3..=max_n`; homological columns for `n <= homology_limit`.
/// Rows are computed independently and returned ordered by `n`.
pub fn cycle_survey(max_n: usize, engine: &Engine, homology_limit: usize) -> Result<Vec<CycleReport>> {
    at_least("cycle survey", max_n, 3)?;
    (3..=max_n).into_par_iter().map(|n| cycle_row(n, engine, homology_limit)).collect()
}
