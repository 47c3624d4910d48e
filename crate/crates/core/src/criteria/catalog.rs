//! Known `n = 7` shifted-pair solutions, one family `t·ξ` (`t > 0`) per entry.

use serde::Serialize;

use crate::algebra::Scalar;
use crate::reciprocal::XiVector;

use super::factorization::{shifted_configs_n7, ShiftedPairConfig};
use super::n7::constant;

/// Which opposite-sign configuration the family belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// Foci `√(2+√2)`, `−√(2−√2)`; `E₀` through `±√2`.
    OuterInner,
    /// Foci `√(2+√2)`, `−√2`; `E₀` through `±√(2−√2)`.
    OuterMiddle,
    /// Foci `√2`, `−√(2−√2)`; `E₀` through `±√(2+√2)`.
    MiddleInner,
}

impl Theorem {
    pub fn config(self) -> ShiftedPairConfig {
        let i = match self {
            Theorem::OuterInner => 0,
            Theorem::OuterMiddle => 1,
            Theorem::MiddleInner => 2,
        };
        shifted_configs_n7().swap_remove(i)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CatalogEntry {
    pub theorem: Theorem,
    /// 1-based position within its family list.
    pub index: usize,
    pub xi: XiVector,
    pub config: ShiftedPairConfig,
    /// Expected squared minor half-axes of `±E` and `E₀` at `t = 1`.
    pub expected_c: Scalar,
    pub expected_c0: Scalar,
    /// Entries known only to six significant digits.
    pub approximate: bool,
}

struct Raw {
    xi: &'static str,
    vanishing: usize,
    c: &'static str,
    c0: &'static str,
}

const OUTER_INNER: [Raw; 2] = [
    Raw {
        xi: "2*(sqrt2-1), 3-2*sqrt2, 0, 1, 0, 1",
        vanishing: 3,
        c: "1",
        c0: "1",
    },
    Raw {
        xi: "sqrt2+1, 0, sqrt2+1, 0, sqrt2-1, 2",
        vanishing: 2,
        c: "sqrt2+1",
        c0: "sqrt2+1",
    },
];

const OUTER_MIDDLE: [Raw; 4] = [
    Raw {
        xi: "1, 0, -7*sqrt2+4*sqrt(10-7*sqrt2)+9, 2*(sqrt2-2*sqrt(2*(sqrt2+2))+4), \
             -8*sqrt2+6*sqrt(4-2*sqrt2)+5, 2*(2*sqrt2+sqrt(20-14*sqrt2)-3)",
        vanishing: 2,
        c: "1",
        c0: "15-9*sqrt2-4*sqrt(20-14*sqrt2)",
    },
    Raw {
        xi: "1, 0, -2*sqrt(sqrt2+2)+3/sqrt2+2, 2*sqrt(2-sqrt2)+1/sqrt2-2, \
             2*(sqrt2-2*sqrt(2*(sqrt2+2))+4), -6*sqrt2+4*sqrt(7*sqrt2+10)-9",
        vanishing: 2,
        c: "1",
        c0: "2*(sqrt(2*(sqrt2+2))-sqrt2-1)",
    },
    Raw {
        xi: "1, 1.69724, 0, 1.01396, 1.19026, 0.790003",
        vanishing: 3,
        c: "2.69724",
        c0: "0.296983",
    },
    Raw {
        xi: "1, 1.51367, 0, 1.0412, 0.944947, 0.900544",
        vanishing: 3,
        c: "2.51367",
        c0: "0.373021",
    },
];

const MIDDLE_INNER: [Raw; 3] = [
    Raw {
        xi: "1, 0, 7*sqrt2-4*sqrt(7*sqrt2+10)+9, -2*(sqrt2+2*sqrt(4-2*sqrt2)-4), \
             8*sqrt2-6*sqrt(2*(sqrt2+2))+5, 2*(-2*sqrt2+sqrt(14*sqrt2+20)-3)",
        vanishing: 2,
        c: "1",
        c0: "9*sqrt2-4*sqrt(14*sqrt2+20)+15",
    },
    Raw {
        xi: "1, 0, 2*sqrt(2-sqrt2)-3/sqrt2+2, 2*sqrt(sqrt2+2)-1/sqrt2-2, \
             -2*(sqrt2+2*sqrt(4-2*sqrt2)-4), 6*sqrt2+4*sqrt(10-7*sqrt2)-9",
        vanishing: 2,
        c: "1",
        c0: "2*(sqrt2+sqrt(4-2*sqrt2)-1)",
    },
    Raw {
        xi: "1, 0.447769, 0, 1.21903, -0.161745, 2.4715",
        vanishing: 3,
        c: "1.447769",
        c0: "2.081016",
    },
];

fn entry(theorem: Theorem, index: usize, raw: &Raw) -> CatalogEntry {
    let xi: Vec<Scalar> = raw.xi.split(',').map(|t| constant(t.trim())).collect();
    let approximate = xi.iter().any(|x| !x.is_exact());
    // One approximate family has a slightly negative entry, so no sign check here.
    let xi = XiVector::new_signed(7, xi).expect("catalog vectors have six entries");
    CatalogEntry {
        theorem,
        index,
        xi,
        config: theorem.config().with_vanishing(raw.vanishing),
        expected_c: constant(raw.c),
        expected_c0: constant(raw.c0),
        approximate,
    }
}

/// Appends the transposed families `ξ_j ↦ ξ_{7−j}` after the listed ones.
fn family(theorem: Theorem, raws: &[Raw], with_transposes: bool) -> Vec<CatalogEntry> {
    let base: Vec<CatalogEntry> = raws
        .iter()
        .enumerate()
        .map(|(i, r)| entry(theorem, i + 1, r))
        .collect();
    let mut out = base.clone();
    if with_transposes {
        for e in base {
            let k = e.config.vanishing.map(|k| 7 - k);
            out.push(CatalogEntry {
                index: out.len() + 1,
                xi: e.xi.transposed(),
                config: ShiftedPairConfig {
                    vanishing: k,
                    ..e.config
                },
                ..e
            });
        }
    }
    out
}

/// All sixteen catalogued families: 2 + 8 + 6.
pub fn paper_catalog_n7() -> Vec<CatalogEntry> {
    let mut out = family(Theorem::OuterInner, &OUTER_INNER, false);
    out.extend(family(Theorem::OuterMiddle, &OUTER_MIDDLE, true));
    out.extend(family(Theorem::MiddleInner, &MIDDLE_INNER, true));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let cat = paper_catalog_n7();
        let count = |t| cat.iter().filter(|e| e.theorem == t).count();
        assert_eq!(count(Theorem::OuterInner), 2);
        assert_eq!(count(Theorem::OuterMiddle), 8);
        assert_eq!(count(Theorem::MiddleInner), 6);
        assert_eq!(cat.iter().filter(|e| e.approximate).count(), 6);
    }

    #[test]
    fn tangency_index_vanishes() {
        for e in paper_catalog_n7() {
            let k = e.config.vanishing.unwrap();
            assert!((2..=5).contains(&k));
            assert!(
                e.xi.get(k).to_f64().abs() < 1e-12,
                "{:?} {}",
                e.theorem,
                e.index
            );
        }
    }
}
