//! The Kippenhahn polynomial `P_n(ζ, ρ)` of a reciprocal matrix and the objects
//! derived from it by substituting elliptic parametrisations.
//!
//! `det(Re(e^{iθ}A) − λI) = (−λ)^{n mod 2} · P_n(λ², cos²θ)`, and `P_n` depends on
//! the matrix only through `ξ`.

use crate::algebra::{Poly, RhoPoly, Ring, Scalar, ScalarRing, ZetaRhoPoly};
use crate::reciprocal::XiVector;

/// `D_n(ζ)` for the tridiagonal determinant with diagonal `a`, off-diagonal
/// products `η_1..η_{n−1}` and `ζ = a²`, the factor `a` removed for odd `n`.
///
/// Runs the three-term recursion; the result is monic of degree `⌊n/2⌋`.
pub fn tridiag_coeffs<R: Ring>(eta: &[R]) -> Poly<R> {
    let mut prev = Poly::<R>::one(); // D_0
    let mut cur = Poly::<R>::one(); // D_1
    for (i, e) in eta.iter().enumerate() {
        let k = i + 2;
        let lead = if k % 2 == 0 {
            cur.clone() * Poly::x()
        } else {
            cur.clone()
        };
        let next = lead - prev.scale(e);
        prev = cur;
        cur = next;
    }
    cur
}

/// The same polynomial as [`tridiag_coeffs`], summed over non-consecutive index sets.
pub fn tridiag_coeffs_enumerated<R: Ring>(eta: &[R]) -> Poly<R> {
    let n = eta.len() + 1;
    let m = n / 2;
    let mut coeffs = vec![R::zero(); m + 1];
    let mut chosen = Vec::new();
    enumerate_sets(eta, 0, &mut chosen, &mut coeffs, m);
    Poly::new(coeffs)
}

fn enumerate_sets<R: Ring>(
    eta: &[R],
    start: usize,
    chosen: &mut Vec<usize>,
    coeffs: &mut [R],
    m: usize,
) {
    let j = chosen.len();
    let prod = chosen.iter().fold(R::one(), |acc, &i| acc * eta[i].clone());
    let term = if j % 2 == 1 { -prod } else { prod };
    coeffs[m - j] = coeffs[m - j].clone() + term;
    if j == m {
        return;
    }
    for i in start..eta.len() {
        chosen.push(i);
        enumerate_sets(eta, i + 2, chosen, coeffs, m);
        chosen.pop();
    }
}

/// `P_n(ζ, ρ)`, monic of degree `m = ⌊n/2⌋` in `ζ`.
#[derive(Clone, Debug, PartialEq)]
pub struct KippenhahnPoly<R = Scalar> {
    pub n: usize,
    pub poly: ZetaRhoPoly<R>,
    /// For odd `n` the full characteristic polynomial carries an extra factor `−λ`,
    /// which puts the origin on the curve.
    pub odd_n: bool,
}

impl<R: Ring> KippenhahnPoly<R> {
    pub fn m(&self) -> usize {
        self.n / 2
    }

    /// `p_j(ρ)`, the coefficient of `ζ^j`.
    pub fn coeff(&self, j: usize) -> RhoPoly<R> {
        self.poly.coeff(j)
    }

    /// `P_n(ζ, ρ)` at numeric arguments.
    pub fn eval(&self, zeta: &R, rho: &R) -> R {
        let at_rho: Poly<R> = self.poly.map(|c| c.eval(rho));
        at_rho.eval(zeta)
    }

    /// Coefficients mapped into another ring.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> KippenhahnPoly<S> {
        KippenhahnPoly {
            n: self.n,
            poly: self.poly.map(|c| c.map(&f)),
            odd_n: self.odd_n,
        }
    }
}

/// Builds `P_n` from `ξ` over any scalar ring, e.g. symbolic indeterminates.
pub fn kippenhahn_poly_from<R: ScalarRing>(xi: &[R]) -> KippenhahnPoly<R> {
    let eta: Vec<RhoPoly<R>> = xi
        .iter()
        .map(|x| Poly::linear(x.clone(), R::one()))
        .collect();
    let n = xi.len() + 1;
    KippenhahnPoly {
        n,
        poly: tridiag_coeffs(&eta),
        odd_n: n % 2 == 1,
    }
}

pub fn kippenhahn_poly(xi: &XiVector) -> KippenhahnPoly<Scalar> {
    kippenhahn_poly_from(xi.entries())
}

/// `P_n(C + ρX², ρ)` as a polynomial in `ρ`; its coefficients are the `f_j`.
///
/// To keep `C` symbolic, pass a ring whose elements are polynomials in `C`
/// (see [`lift_to_c`]).
pub fn substitute_linear<R: Ring>(p: &KippenhahnPoly<R>, c: &R, x2: &R) -> RhoPoly<R> {
    let inner = Poly::linear(c.clone(), x2.clone());
    p.poly
        .coeffs()
        .iter()
        .rev()
        .fold(Poly::zero(), |acc, pj| acc * inner.clone() + pj.clone())
}

/// Embeds the coefficients into polynomials in a new variable `C`.
pub fn lift_to_c<R: Ring>(p: &KippenhahnPoly<R>) -> KippenhahnPoly<Poly<R>> {
    p.map(|c| Poly::constant(c.clone()))
}

/// `R_e = P(ζ₊) + P(ζ₋)` and `R_o = (P(ζ₊) − P(ζ₋))/s` for
/// `ζ± = C + (p² + X²)ρ ± 2p·s`, `s² = ρ(C + X²ρ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct EvenOddPair<R = Scalar> {
    pub re: RhoPoly<R>,
    pub ro: RhoPoly<R>,
}

/// `a + b·s` in the extension by `s² = σ(ρ)`.
#[derive(Clone)]
struct Ext<R: Ring> {
    a: Poly<R>,
    b: Poly<R>,
}

impl<R: Ring> Ext<R> {
    fn mul(&self, other: &Ext<R>, sigma: &Poly<R>) -> Ext<R> {
        Ext {
            a: self.a.clone() * other.a.clone() + self.b.clone() * other.b.clone() * sigma.clone(),
            b: self.a.clone() * other.b.clone() + self.b.clone() * other.a.clone(),
        }
    }
}

pub fn even_odd_split<R: Ring>(p: &KippenhahnPoly<R>, center: &R, x2: &R, c: &R) -> EvenOddPair<R> {
    let p2 = center.clone() * center.clone();
    let sigma = Poly::new(vec![R::zero(), c.clone(), x2.clone()]);
    let zeta = Ext {
        a: Poly::linear(c.clone(), p2 + x2.clone()),
        b: Poly::constant(R::from_i64(2) * center.clone()),
    };
    let mut acc = Ext {
        a: Poly::zero(),
        b: Poly::zero(),
    };
    for pj in p.poly.coeffs().iter().rev() {
        acc = acc.mul(&zeta, &sigma);
        acc.a = acc.a + pj.clone();
    }
    let two = R::from_i64(2);
    EvenOddPair {
        re: acc.a.scale(&two),
        ro: acc.b.scale(&two),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Symbolic;
    use crate::reciprocal::char_poly_qn;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::int(x)).collect()
    }

    #[test]
    fn two_by_two() {
        let d = tridiag_coeffs(&ints(&[5]));
        assert_eq!(d.coeffs(), &ints(&[-5, 1])[..]);
    }

    #[test]
    fn four_by_four_unit_eta() {
        let d = tridiag_coeffs(&ints(&[1, 1, 1]));
        assert_eq!(d.coeffs(), &ints(&[1, -3, 1])[..]);
    }

    #[test]
    fn recursion_matches_enumeration() {
        for n in 2..=9 {
            let eta: Vec<Scalar> = (1..n).map(|i| Scalar::int(i as i64 * 3 - 7)).collect();
            assert_eq!(
                tridiag_coeffs(&eta),
                tridiag_coeffs_enumerated(&eta),
                "n = {n}"
            );
        }
    }

    #[test]
    fn zero_xi_gives_qn_pattern() {
        for n in 2..=9 {
            let p = kippenhahn_poly(&XiVector::new(n, ints(&vec![0; n - 1])).unwrap());
            let q = char_poly_qn(n);
            for j in 0..=n / 2 {
                // p_j(ρ) = q_j ρ^{m−j}
                let expected = Poly::monomial(q.coeff(j), n / 2 - j);
                assert_eq!(p.coeff(j), expected);
            }
        }
    }

    #[test]
    fn f_m_is_q_n_of_x() {
        let names = ["x1", "x2", "x3", "x4", "C", "X2"];
        let xi: Vec<Symbolic> = (0..4).map(Symbolic::var).collect();
        let p = kippenhahn_poly_from(&xi);
        let f = substitute_linear(&p, &Symbolic::var(4), &Symbolic::var(5));
        let fm = f.coeff(2);
        let q = char_poly_qn(5).map(|c| Symbolic::constant(c.clone()));
        assert_eq!(fm, q.eval(&Symbolic::var(5)), "{}", fm.display_with(&names));
    }

    #[test]
    fn zero_center_gives_doubled_substitution() {
        let xi = XiVector::from_ints(&[1, 4, 1, 1, 2, 3]).unwrap();
        let p = kippenhahn_poly(&xi);
        let (c, x2) = (Scalar::int(5), Scalar::int(2));
        let pair = even_odd_split(&p, &Scalar::int(0), &x2, &c);
        assert!(pair.ro.is_zero());
        assert_eq!(
            pair.re,
            substitute_linear(&p, &c, &x2).scale(&Scalar::int(2))
        );
    }
}
