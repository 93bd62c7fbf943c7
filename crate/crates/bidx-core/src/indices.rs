//! Bond incident degree indices: BID(G) = sum over edges uv of
//! Psi(d_u, d_v), with the named special cases as built-ins and the
//! closed-form family values for cross-checking.

use alloc::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{make_family, FamilyId, FamilyTag};
use crate::graph::Graph;

/// Relative tolerance under which two float index values are reported tied.
pub const TIE_REL_TOL: f64 = 1e-9;

/// Built-in edge-weight functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexKind {
    /// General sum-connectivity: (d_u + d_v)^alpha.
    Chi,
    /// General Platt: (d_u + d_v - 2)^alpha.
    Pl,
    /// Variable sum exdeg: a^{d_u} + a^{d_v}.
    Sei,
    /// First Zagreb: d_u + d_v.
    M1,
    /// Platt: d_u + d_v - 2.
    Platt,
    /// User-supplied symmetric weight.
    Custom,
}

type Psi = Arc<dyn Fn(usize, usize) -> f64 + Send + Sync>;

/// A named BID index with its real parameter.
#[derive(Clone)]
pub struct IndexSpec {
    kind: IndexKind,
    param: f64,
    custom: Option<Psi>,
}

impl core::fmt::Debug for IndexSpec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "IndexSpec({:?}, param={})", self.kind, self.param)
    }
}

impl IndexSpec {
    pub fn chi(alpha: f64) -> Result<IndexSpec> {
        if alpha == 0.0 || !alpha.is_finite() {
            return Err(Error::InvalidIndexSpec("chi requires a finite alpha != 0"));
        }
        Ok(IndexSpec {
            kind: IndexKind::Chi,
            param: alpha,
            custom: None,
        })
    }

    pub fn pl(alpha: f64) -> Result<IndexSpec> {
        if alpha == 0.0 || !alpha.is_finite() {
            return Err(Error::InvalidIndexSpec("pl requires a finite alpha != 0"));
        }
        Ok(IndexSpec {
            kind: IndexKind::Pl,
            param: alpha,
            custom: None,
        })
    }

    pub fn sei(a: f64) -> Result<IndexSpec> {
        if !(a > 0.0) || a == 1.0 || !a.is_finite() {
            return Err(Error::InvalidIndexSpec("sei requires a > 0 and a != 1"));
        }
        Ok(IndexSpec {
            kind: IndexKind::Sei,
            param: a,
            custom: None,
        })
    }

    pub fn m1() -> IndexSpec {
        IndexSpec {
            kind: IndexKind::M1,
            param: 0.0,
            custom: None,
        }
    }

    pub fn platt() -> IndexSpec {
        IndexSpec {
            kind: IndexKind::Platt,
            param: 0.0,
            custom: None,
        }
    }

    pub fn custom(psi: Psi) -> IndexSpec {
        IndexSpec {
            kind: IndexKind::Custom,
            param: 0.0,
            custom: Some(psi),
        }
    }

    /// Builds a spec from serialized kind + parameter (no custom function).
    pub fn from_kind(kind: IndexKind, param: f64) -> Result<IndexSpec> {
        match kind {
            IndexKind::Chi => IndexSpec::chi(param),
            IndexKind::Pl => IndexSpec::pl(param),
            IndexKind::Sei => IndexSpec::sei(param),
            IndexKind::M1 => Ok(IndexSpec::m1()),
            IndexKind::Platt => Ok(IndexSpec::platt()),
            IndexKind::Custom => Err(Error::InvalidIndexSpec(
                "custom requires a weight function",
            )),
        }
    }

    pub fn kind(&self) -> IndexKind {
        self.kind
    }

    pub fn param(&self) -> f64 {
        self.param
    }

    /// When the computation is provably integral (integer alpha with integer
    /// Psi), the exponent of the exact evaluation path.
    pub fn exact_exponent(&self) -> Option<u32> {
        match self.kind {
            IndexKind::M1 | IndexKind::Platt => Some(1),
            IndexKind::Chi | IndexKind::Pl => {
                if self.param >= 1.0 && self.param <= 40.0 && self.param == libm::floor(self.param) {
                    Some(self.param as u32)
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Psi on a degree pair, float path.
    pub fn psi(&self, du: usize, dv: usize) -> Result<f64> {
        Ok(match self.kind {
            IndexKind::Chi => libm::pow((du + dv) as f64, self.param),
            IndexKind::Pl => {
                let base = (du + dv) as f64 - 2.0;
                if base == 0.0 {
                    if self.param > 0.0 {
                        0.0
                    } else {
                        return Err(Error::UndefinedPower { du, dv });
                    }
                } else {
                    libm::pow(base, self.param)
                }
            }
            IndexKind::Sei => libm::pow(self.param, du as f64) + libm::pow(self.param, dv as f64),
            IndexKind::M1 => (du + dv) as f64,
            IndexKind::Platt => (du + dv) as f64 - 2.0,
            IndexKind::Custom => (self
                .custom
                .as_ref()
                .ok_or(Error::InvalidIndexSpec("custom requires a weight function"))?)(
                du, dv
            ),
        })
    }

    /// Psi on a degree pair, exact path. `None` when no exact path applies.
    pub fn psi_exact(&self, du: usize, dv: usize) -> Option<i128> {
        let e = self.exact_exponent()?;
        let base = match self.kind {
            IndexKind::Chi => (du + dv) as i128,
            IndexKind::Pl | IndexKind::Platt => (du + dv) as i128 - 2,
            IndexKind::M1 => (du + dv) as i128,
            _ => return None,
        };
        Some(base.pow(e))
    }
}

/// The value of a BID index, carrying the exact integer when available.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IndexValue {
    pub value: f64,
    pub exact_integer: Option<i128>,
}

impl IndexValue {
    fn from_exact(exact: i128) -> IndexValue {
        IndexValue {
            value: exact as f64,
            exact_integer: Some(exact),
        }
    }

    fn from_float(value: f64) -> IndexValue {
        IndexValue {
            value,
            exact_integer: None,
        }
    }

    /// True when the two values are equal: exactly, if both carry integers,
    /// else within relative tolerance `rel`.
    pub fn ties(&self, other: &IndexValue, rel: f64) -> bool {
        match (self.exact_integer, other.exact_integer) {
            (Some(a), Some(b)) => a == b,
            _ => {
                let scale = self.value.abs().max(other.value.abs()).max(1.0);
                (self.value - other.value).abs() <= rel * scale
            }
        }
    }
}

/// Evaluates a BID index on a graph: the sum of Psi over all edges.
pub fn evaluate_bid(spec: &IndexSpec, g: &Graph) -> Result<IndexValue> {
    if spec.exact_exponent().is_some() {
        let mut total: i128 = 0;
        for &(u, v) in g.edges() {
            total += spec
                .psi_exact(g.degree(u), g.degree(v))
                .expect("exact path available");
        }
        return Ok(IndexValue::from_exact(total));
    }
    let mut total = 0.0;
    for &(u, v) in g.edges() {
        total += spec.psi(g.degree(u), g.degree(v))?;
    }
    Ok(IndexValue::from_float(total))
}

/// Checks the line-graph size identity |E(L(G))| = M1(G)/2 - m on a
/// connected graph. Always true; a false return signals a bug.
pub fn line_graph_size_check(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let lg = g.line_graph()?;
    Ok(lg.m() == g.first_zagreb() / 2 - g.m())
}

/// Closed-form family values as displayed in the source analyses: each
/// family's index value as an explicit function of n and the parameter,
/// independent of any graph construction.
///
/// Supported: S, S+, B1, B2, G4, G5, H4, H5, H8.
pub fn closed_form(spec: &IndexSpec, id: FamilyId) -> Result<IndexValue> {
    let min = id.tag.min_n();
    if id.n < min {
        return Err(Error::FamilyTooSmall {
            tag: id.tag,
            min_n: min,
        });
    }
    let n = id.n as i128;
    // Terms (count, d_u + d_v) over the edges of the family; counts and
    // degree sums are affine in n. Serves both chi (base s) and pl (s - 2).
    let sum_terms: &[(i128, i128)] = match id.tag {
        FamilyTag::S => &[(n - 1, n)],
        FamilyTag::SPlus => &[(1, 4), (2, n + 1), (n - 3, n)],
        FamilyTag::B1 => &[(2, 5), (2, n + 1), (1, n + 2), (n - 4, n)],
        FamilyTag::B2 => &[(2, 4), (4, n + 1), (n - 5, n)],
        FamilyTag::G4 => &[(3, 6), (1, n + 3), (3, n + 1), (n - 5, n)],
        FamilyTag::G5 => &[(3, 6), (3, n + 2), (n - 4, n)],
        FamilyTag::H4 => &[(4, 7), (1, n + 4), (4, n + 1), (n - 6, n)],
        FamilyTag::H5 => &[
            (2, 7),
            (2, 6),
            (1, n + 3),
            (2, n + 2),
            (1, n + 1),
            (n - 5, n),
        ],
        FamilyTag::H8 => &[(4, 6), (4, n + 2), (n - 5, n)],
        tag => return Err(Error::UnsupportedFamily { tag }),
    };
    // Vertex-degree census (count, degree) for the sei form
    // SEI_a = sum over vertices of d * a^d.
    let deg_terms: &[(i128, i128)] = match id.tag {
        FamilyTag::S => &[(1, n - 1), (n - 1, 1)],
        FamilyTag::SPlus => &[(1, n - 1), (2, 2), (n - 3, 1)],
        FamilyTag::B1 => &[(1, n - 1), (1, 3), (2, 2), (n - 4, 1)],
        FamilyTag::B2 => &[(1, n - 1), (4, 2), (n - 5, 1)],
        FamilyTag::G4 => &[(1, n - 1), (1, 4), (3, 2), (n - 5, 1)],
        FamilyTag::G5 => &[(1, n - 1), (3, 3), (n - 4, 1)],
        FamilyTag::H4 => &[(1, n - 1), (1, 5), (4, 2), (n - 6, 1)],
        FamilyTag::H5 => &[(1, n - 1), (1, 4), (2, 3), (1, 2), (n - 5, 1)],
        FamilyTag::H8 => &[(1, n - 1), (4, 3), (n - 5, 1)],
        _ => unreachable!(),
    };
    match spec.kind {
        IndexKind::Chi | IndexKind::M1 | IndexKind::Pl | IndexKind::Platt => {
            let shift = match spec.kind {
                IndexKind::Chi | IndexKind::M1 => 0,
                _ => 2,
            };
            let alpha = match spec.kind {
                IndexKind::M1 | IndexKind::Platt => 1.0,
                _ => spec.param,
            };
            if let Some(e) = spec.exact_exponent() {
                let mut total: i128 = 0;
                for &(count, s) in sum_terms {
                    total += count * (s - shift).pow(e);
                }
                Ok(IndexValue::from_exact(total))
            } else {
                let mut total = 0.0;
                for &(count, s) in sum_terms {
                    let base = (s - shift) as f64;
                    let term = if base == 0.0 {
                        if alpha > 0.0 {
                            0.0
                        } else {
                            return Err(Error::UndefinedPower { du: 1, dv: 1 });
                        }
                    } else {
                        libm::pow(base, alpha)
                    };
                    total += count as f64 * term;
                }
                Ok(IndexValue::from_float(total))
            }
        }
        IndexKind::Sei => {
            let a = spec.param;
            let mut total = 0.0;
            for &(count, d) in deg_terms {
                total += count as f64 * d as f64 * libm::pow(a, d as f64);
            }
            Ok(IndexValue::from_float(total))
        }
        IndexKind::Custom => Err(Error::InvalidIndexSpec(
            "no closed form for custom indices",
        )),
    }
}

/// Convenience: closed form and direct evaluation on the constructed family.
pub fn family_value(spec: &IndexSpec, id: FamilyId) -> Result<IndexValue> {
    evaluate_bid(spec, &make_family(id)?)
}
