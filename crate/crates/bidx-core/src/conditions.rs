//! Numerical certificates for the degree-shift hypotheses.
//!
//! For the extension f of Psi, every integer tuple (x, c, t, y) with
//! x >= c > t >= 1, c >= 2, y >= 1 inside the grid bound is checked for
//!
//!   delta1 = f(x+t, y) - f(x, y) + f(c-t, y) - f(c, y)
//!   delta2 = f(x+t, c-t) - f(x, c)
//!
//! MAX mode requires both non-negative plus either strict monotonicity of
//! f in each variable on [1, N], or weak monotonicity with one of the
//! deltas strictly positive at every tuple. MIN mode mirrors the signs.

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::indices::{IndexKind, IndexSpec};

/// Optimization sense, shared by the condition checker and extremal search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Max,
    Min,
}

/// Values in (-SIGN_TOL, 0) are treated as zero, absorbing float noise on
/// analytically-zero expressions.
pub const SIGN_TOL: f64 = 1e-12;

/// How the hypotheses were satisfied, if at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Strictness {
    StrictMonotone,
    WeakWithPositiveDelta,
    Failed,
}

/// A grid tuple violating the sign requirements, with both delta values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub x: usize,
    pub c: usize,
    pub t: usize,
    pub y: usize,
    pub delta1: f64,
    pub delta2: f64,
}

/// Verdict of the hypothesis grid-check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub kind: IndexKind,
    pub param: f64,
    pub mode: Direction,
    pub grid_bound: usize,
    pub monotone_ok: bool,
    pub delta1_ok: bool,
    pub delta2_ok: bool,
    pub strictness: Strictness,
    pub counterexample: Option<Counterexample>,
}

impl ConditionReport {
    pub fn passed(&self) -> bool {
        self.strictness != Strictness::Failed
    }
}

/// The natural real extension f of Psi, tabulated on integer arguments.
struct Extension {
    // f(x, y) for 0 <= x, y <= 3 * bound, via pow tables where separable.
    table: Vec<f64>,
    width: usize,
}

impl Extension {
    fn build(spec: &IndexSpec, bound: usize) -> Result<Extension> {
        let width = 3 * bound + 1;
        let (kind, param) = match spec.kind() {
            IndexKind::M1 => (IndexKind::Chi, 1.0),
            IndexKind::Platt => (IndexKind::Pl, 1.0),
            IndexKind::Custom => {
                return Err(Error::InvalidIndexSpec(
                    "condition check needs a built-in extension",
                ))
            }
            k => (k, spec.param()),
        };
        let mut table = alloc::vec![0.0; width * width];
        match kind {
            IndexKind::Chi | IndexKind::Pl => {
                let shift = if kind == IndexKind::Pl { 2 } else { 0 };
                if kind == IndexKind::Pl && param < 0.0 {
                    // The grid includes (1, 1), where (x + y - 2)^param blows up.
                    return Err(Error::UndefinedPower { du: 1, dv: 1 });
                }
                let mut pow_sum = alloc::vec![0.0; 2 * width];
                for (s, slot) in pow_sum.iter_mut().enumerate() {
                    let base = s as f64 - shift as f64;
                    *slot = if base > 0.0 {
                        libm::pow(base, param)
                    } else if base == 0.0 && param > 0.0 {
                        0.0
                    } else {
                        f64::NAN // never consulted: x + y >= 2 on the grid
                    };
                }
                for x in 0..width {
                    for y in 0..width {
                        table[x * width + y] = pow_sum[x + y];
                    }
                }
            }
            IndexKind::Sei => {
                let mut pow_a = alloc::vec![0.0; width];
                for (x, slot) in pow_a.iter_mut().enumerate() {
                    *slot = libm::pow(param, x as f64);
                }
                for x in 0..width {
                    for y in 0..width {
                        table[x * width + y] = pow_a[x] + pow_a[y];
                    }
                }
            }
            _ => unreachable!(),
        }
        Ok(Extension { table, width })
    }

    #[inline]
    fn f(&self, x: usize, y: usize) -> f64 {
        self.table[x * self.width + y]
    }
}

/// Evaluates both delta expressions at a single tuple.
pub fn deltas_at(spec: &IndexSpec, x: usize, c: usize, t: usize, y: usize) -> Result<(f64, f64)> {
    let ext = Extension::build(spec, x.max(c).max(y))?;
    Ok(deltas(&ext, x, c, t, y))
}

#[inline]
fn deltas(ext: &Extension, x: usize, c: usize, t: usize, y: usize) -> (f64, f64) {
    let d1 = ext.f(x + t, y) - ext.f(x, y) + ext.f(c - t, y) - ext.f(c, y);
    let d2 = ext.f(x + t, c - t) - ext.f(x, c);
    (d1, d2)
}

/// Certifies the hypotheses over the integer grid with the given bound.
pub fn check_conditions(
    spec: &IndexSpec,
    mode: Direction,
    grid_bound: usize,
) -> Result<ConditionReport> {
    if grid_bound < 3 {
        return Err(Error::GridBoundTooSmall { bound: grid_bound });
    }
    let n = grid_bound;
    let ext = Extension::build(spec, n)?;
    let sign = match mode {
        Direction::Max => 1.0,
        Direction::Min => -1.0,
    };

    // Monotonicity via unit steps on [1, N], in both variables.
    let mut weak = true;
    let mut strict = true;
    for x in 1..n {
        for y in 1..=n {
            for step in [
                sign * (ext.f(x + 1, y) - ext.f(x, y)),
                sign * (ext.f(y, x + 1) - ext.f(y, x)),
            ] {
                if step < -SIGN_TOL {
                    weak = false;
                }
                if step <= SIGN_TOL {
                    strict = false;
                }
            }
        }
    }

    let mut delta1_ok = true;
    let mut delta2_ok = true;
    let mut some_delta_positive_everywhere = true;
    let mut counterexample: Option<Counterexample> = None;
    // Lexicographic tuple order (x, c, t, y): the first violation found is
    // the smallest, which keeps parallel y-slice merges deterministic.
    for x in 2..=n {
        for c in 2..=x {
            for t in 1..c {
                for y in 1..=n {
                    let (d1, d2) = deltas(&ext, x, c, t, y);
                    let ok1 = sign * d1 >= -SIGN_TOL;
                    let ok2 = sign * d2 >= -SIGN_TOL;
                    if !(ok1 && ok2) {
                        delta1_ok &= ok1;
                        delta2_ok &= ok2;
                        if counterexample.is_none() {
                            counterexample = Some(Counterexample {
                                x,
                                c,
                                t,
                                y,
                                delta1: d1,
                                delta2: d2,
                            });
                        }
                    }
                    if sign * d1 <= SIGN_TOL && sign * d2 <= SIGN_TOL {
                        some_delta_positive_everywhere = false;
                    }
                }
            }
        }
    }

    let strictness = if delta1_ok && delta2_ok {
        if strict {
            Strictness::StrictMonotone
        } else if weak && some_delta_positive_everywhere {
            Strictness::WeakWithPositiveDelta
        } else {
            Strictness::Failed
        }
    } else {
        Strictness::Failed
    };

    Ok(ConditionReport {
        kind: spec.kind(),
        param: spec.param(),
        mode,
        grid_bound,
        monotone_ok: weak,
        delta1_ok,
        delta2_ok,
        strictness,
        counterexample,
    })
}
