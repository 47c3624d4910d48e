//! Explicit `n = 7` systems, written out as polynomials in the named variables
//! [`VARS`] and evaluated literally.
//!
//! They serve as cross-checks for the generic procedures, which assert on every
//! exact call that the literal and the generic systems agree.

use std::sync::OnceLock;

use crate::algebra::{parse_expr, AlgebraError, Ring, Scalar, Symbolic};
use crate::reciprocal::XiVector;

use super::report::Mode;
use super::CriteriaError;

/// Variable names, in index order: `ξ₁..ξ₆`, `C`, `C₀`, `X`, `p`, `ζ`, `ρ`, `X₀`.
pub const VARS: [&str; 13] = [
    "x1", "x2", "x3", "x4", "x5", "x6", "C", "C0", "X", "p", "z", "r", "X0",
];

pub const C: usize = 6;
pub const C0: usize = 7;
pub const X: usize = 8;
pub const P: usize = 9;
pub const ZETA: usize = 10;
pub const RHO: usize = 11;
pub const X0: usize = 12;

/// Parses a polynomial in [`VARS`].
pub fn parse(src: &str) -> Result<Symbolic, AlgebraError> {
    parse_expr(src)?.eval_symbolic(&VARS)
}

/// Parses a constant such as `sqrt(2-sqrt2)`.
pub fn constant(src: &str) -> Scalar {
    src.parse()
        .unwrap_or_else(|e| panic!("constant literal '{src}' is malformed: {e}"))
}

fn lit(src: &str) -> Symbolic {
    parse(src).unwrap_or_else(|e| panic!("polynomial literal is malformed: {e}\n{src}"))
}

/// Variable assignment for [`eval`]; unset variables are zero.
#[derive(Clone, Debug)]
pub struct Point(Vec<Scalar>);

impl Point {
    pub fn new(xi: &[Scalar]) -> Self {
        let mut v = vec![Scalar::int(0); VARS.len()];
        for (slot, x) in v.iter_mut().zip(xi) {
            *slot = x.clone();
        }
        Point(v)
    }

    pub fn with(mut self, var: usize, value: Scalar) -> Self {
        self.0[var] = value;
        self
    }

    pub fn eval(&self, poly: &Symbolic) -> Scalar {
        poly.eval(&self.0)
    }
}

/// Every literal system, parsed once.
pub struct Literals {
    pub p7: Symbolic,
    /// `C` on the origin ellipse with `X = X_k`, `k = 1, 2, 3`.
    pub origin_c: [Symbolic; 3],
    /// The origin system in `C` and `X`: the linear equation fixing `C`, then the
    /// quadratic and cubic residual equations.
    pub fxic: [Symbolic; 3],
    /// First branch of the simplified `X = √2` condition.
    pub crit71: Symbolic,
    /// Second branch of the simplified `X = √2` condition (both must vanish).
    pub crit71_pair: [Symbolic; 2],
    /// Concentric residual equations.
    pub con7: [Symbolic; 3],
    /// First branch of the simplified concentric condition.
    pub con71: [Symbolic; 2],
    /// Shifted-pair equations in `p`, `X`, `C` (the third one corrected).
    pub crish: [Symbolic; 5],
    /// The third shifted-pair equation in its uncorrected form.
    pub crish3_printed: Symbolic,
    /// The eliminated linear form in `ξ` for general `(p, X)`.
    pub linxi: Symbolic,
    /// The factored form `(ζ − (C₀ + ρX₀²))·(quadratic for E ∪ −E)`.
    pub p7shif: Symbolic,
    pub quad_i: Symbolic,
    pub quad_ii: Symbolic,
    /// `(C, C₀)` in cases (i) and (ii).
    pub c_case: [[Symbolic; 2]; 2],
    /// Outer/inner configuration: the conditions on `ξ`, `C`, `C₀`.
    pub outer_inner_c: [Symbolic; 6],
    /// Outer/inner configuration with `C`, `C₀` eliminated (case i).
    pub outer_inner: [Symbolic; 6],
    /// Gröbner basis of the outer/inner system restricted to `ξ₃ = 0`.
    pub groebner_xi3: Vec<Symbolic>,
    /// Gröbner basis of the outer/inner system restricted to `ξ₂ = 0`.
    pub groebner_xi2: Vec<Symbolic>,
    /// Outer/middle configuration restricted to `ξ₂ = 0`.
    pub outer_middle_xi2: [Symbolic; 5],
    /// `ξ₅`, `ξ₆` solved from the two linear equations of `outer_middle_xi2`.
    pub xi56: [Symbolic; 2],
}

pub fn literals() -> &'static Literals {
    static LITS: OnceLock<Literals> = OnceLock::new();
    LITS.get_or_init(build)
}

fn build() -> Literals {
    Literals {
        p7: lit(P7),
        origin_c: [
            lit("(x1 + (sqrt2+1)*x2 + (sqrt2+2)*x3 + (sqrt2+2)*x4 + (sqrt2+1)*x5 + x6)/4"),
            lit("(x1 + x2 + x5 + x6)/2"),
            lit("(x1 + (1-sqrt2)*x2 + (2-sqrt2)*x3 + (2-sqrt2)*x4 + (1-sqrt2)*x5 + x6)/4"),
        ],
        fxic: [lit(FXIC7), lit(FXIC72), lit(FXIC73)],
        crit71: lit("x1+x2-x5-x6"),
        crit71_pair: [lit(CRIT71_Q), lit("x2+x3-x4-x5")],
        con7: [lit(CON7_1), lit(CON7_2), lit(CON7_3)],
        con71: [lit(CON71), lit("x1+x2-x5-x6")],
        crish: [
            lit(CRISH_1),
            lit(CRISH_2),
            lit(CRISH_3),
            lit(CRISH_4),
            lit(CRISH_5),
        ],
        crish3_printed: lit(CRISH_3_PRINTED),
        linxi: lit(LINXI),
        p7shif: lit("(z-(C0+r*X0^2))*(z^2-2*z*(C+r*(p^2+X^2))+(C+r*(X^2-p^2))^2)"),
        quad_i: lit("(x1+x2)^2-(x3+x4+x5+x6)*(x1+x2)+x3*x5+x3*x6+x4*x6"),
        quad_ii: lit("(x5+x6)^2-(x1+x2+x3+x4)*(x5+x6)+x1*x3+x1*x4+x2*x4"),
        c_case: [
            [lit("x1+x2"), lit("x3+x4+x5+x6-(x1+x2)")],
            [lit("x5+x6"), lit("x1+x2+x3+x4-(x5+x6)")],
        ],
        outer_inner_c: [
            lit("C^2*C0 - x2*x4*x6 - x1*(x4*x6 + x3*(x5+x6))"),
            lit("2*C*(C+sqrt2*C0) - x2*x4 - x3*x5 - (x2+x3+2*x4)*x6 - x1*(2*x3+x4+x5+2*x6)"),
            lit("4*sqrt2*C + 2*C0 - 3*x1 - x2 - 2*x3 - 2*x4 - x5 - 3*x6"),
            lit("-C*(C+2*C0) + x3*x5 + (x3+x4)*x6 + x2*(x4+x5+x6) + x1*(x3+x4+x5+x6)"),
            lit("-2*(sqrt2+2)*C - 4*C0 + 4*x1 + 3*x2 + 3*x3 + 3*x4 + 3*x5 + 4*x6"),
            lit("2*C + C0 - x1 - x2 - x3 - x4 - x5 - x6"),
        ],
        outer_inner: [
            lit(SYS_1),
            lit(SYS_2),
            lit("4*sqrt2*x1 - 5*x1 + 4*sqrt2*x2 - 3*x2 + x5 - x6"),
            lit(SYS_4),
            lit("-2*sqrt2*x1 + 4*x1 - 2*sqrt2*x2 + 3*x2 - x3 - x4 - x5"),
            lit("(x1+x2)^2-(x3+x4+x5+x6)*(x1+x2)+x3*x5+x3*x6+x4*x6"),
        ],
        groebner_xi3: GB_XI3.iter().map(|s| lit(s)).collect(),
        groebner_xi2: GB_XI2.iter().map(|s| lit(s)).collect(),
        outer_middle_xi2: [
            lit("x1*(-x1^2 + (x3+x4+x5+x6)*x1 - x4*x6 - x3*(x5+x6))"),
            lit(MID_2),
            lit(
                "(-2*sqrt2 + 4*sqrt(2-sqrt2) - 7)*x1 + 2*(sqrt2+1)*x3 + 2*(sqrt2+1)*x4 \
                 + (2*sqrt2+3)*x5 + (2*sqrt2+1)*x6",
            ),
            lit("x1^2 - (x3+x4+x5+x6)*x1 + x4*x6 + x3*(x5+x6)"),
            lit("(3*sqrt2 - 2*sqrt(2*(2+sqrt2)) + 4)*x1 \
                 + (sqrt2*x3 + sqrt2*x4 + sqrt2*x5 + 2*(sqrt2-1)*x6)/(sqrt2-2)"),
        ],
        xi56: [
            lit("(4*(sqrt2+3) - 6*sqrt(2*(sqrt2+2)))*x1 - (sqrt2+1)*(x3+x4)"),
            lit("(-8*sqrt2 + 2*sqrt(46*sqrt2+68) - 13)*x1 + (sqrt2+1)*(x3+x4)"),
        ],
    }
}

const SYS_1: &str = "-x1^3 - 3*x2*x1^2 + x3*x1^2 + x4*x1^2 + x5*x1^2 + x6*x1^2 - 3*x2^2*x1 \
    + 2*x2*x3*x1 + 2*x2*x4*x1 + 2*x2*x5*x1 - x3*x5*x1 + 2*x2*x6*x1 - x3*x6*x1 - x4*x6*x1 \
    - x2^3 + x2^2*x3 + x2^2*x4 + x2^2*x5 + x2^2*x6 - x2*x4*x6";

const SYS_2: &str = "-2*sqrt2*x1^2 + 2*x1^2 - 4*sqrt2*x2*x1 + 4*x2*x1 + 2*sqrt2*x3*x1 - 2*x3*x1 \
    + 2*sqrt2*x4*x1 - x4*x1 + 2*sqrt2*x5*x1 - x5*x1 + 2*sqrt2*x6*x1 - 2*x6*x1 - 2*sqrt2*x2^2 \
    + 2*x2^2 + 2*sqrt2*x2*x3 + 2*sqrt2*x2*x4 - x2*x4 + 2*sqrt2*x2*x5 - x3*x5 + 2*sqrt2*x2*x6 \
    - x2*x6 - x3*x6 - 2*x4*x6";

const SYS_4: &str = "x1^2 + 2*x2*x1 - x3*x1 - x4*x1 - x5*x1 - x6*x1 + x2^2 - 2*x2*x3 - x2*x4 \
    - x2*x5 + x3*x5 - x2*x6 + x3*x6 + x4*x6";

const GB_XI3: [&str; 6] = [
    "x5*(x5+x6)*(x5^2 - 3*sqrt2*x6*x5 - 4*x6*x5 - 2*sqrt2*x6^2 + 2*x6^2)",
    "204*sqrt2*x5^3 + 123*x5^3 - 903*sqrt2*x6*x5^2 - 1575*x6*x5^2 - 1107*sqrt2*x6^2*x5 \
     - 2356*x6^2*x5 - 658*x6^3 + 658*x4*x6^2",
    "6*sqrt2*x5^2 + 16*x5^2 + 23*x4*x5 + 4*sqrt2*x6*x5 + 26*x6*x5 - 2*sqrt2*x6^2 + 10*x6^2 \
     + 2*sqrt2*x4*x6 - 10*x4*x6",
    "23*x4^2 - 5*sqrt2*x6*x4 - 21*x6*x4 - 15*sqrt2*x5^2 - 17*x5^2 + 5*sqrt2*x6^2 - 2*x6^2 \
     - 10*sqrt2*x5*x6 - 19*x5*x6",
    "3*x2 + 4*sqrt2*x4 - 5*x4 + 2*sqrt2*x5 - x5 + 2*sqrt2*x6 - 4*x6",
    "3*x1 - 4*sqrt2*x4 + 3*x4 - 2*sqrt2*x5 - 2*sqrt2*x6 + 3*x6",
];

const GB_XI2: [&str; 5] = [
    "34*x5^3 + 9*sqrt2*x6*x5^2 - 31*x6*x5^2 + 65*sqrt2*x6^2*x5 - 86*x6^2*x5 + 32*sqrt2*x6^3 \
     - 46*x6^3",
    "104*sqrt2*x5^2 + 158*x5^2 - 5*sqrt2*x6*x5 - x6*x5 - sqrt2*x6^2 - 10*x6^2 + 49*x4*x6",
    "48*sqrt2*x5^2 + 88*x5^2 + 49*x4*x5 - 40*sqrt2*x6*x5 - 8*x6*x5 - 8*sqrt2*x6^2 + 18*x6^2",
    "7*x3 + 7*x4 + 6*sqrt2*x5 + 11*x5 - 6*sqrt2*x6 - 4*x6",
    "7*x1 + 4*sqrt2*x5 + 5*x5 - 4*sqrt2*x6 - 5*x6",
];

const MID_2: &str = "-((sqrt2 + 2*sqrt(2*(sqrt2+2)) - 2)*x1^2) + (2*(sqrt(2*(sqrt2+2)) - 1)*x3 \
    - x4 - x5 - 2*x6 + 2*sqrt(2*(sqrt2+2))*(x4+x5+x6))*x1 - 2*x4*x6 - x3*(x5+x6)";

const P7: &str = "z^3 + z^2*(-x1-x2-x3-x4-x5-x6-6*r) \
    + z*((4*x1+3*x2+3*x3+3*x4+3*x5+4*x6)*r + x1*x3+x1*x4+x2*x4+x1*x5+x2*x5+x3*x5+x1*x6+x2*x6+x3*x6+x4*x6+10*r^2) \
    - 4*r^3 + (-3*x1-x2-2*x3-2*x4-x5-3*x6)*r^2 \
    + (-2*x1*x3-x5*x3-x6*x3-x1*x4-x2*x4-x1*x5-2*x1*x6-x2*x6-2*x4*x6)*r \
    - x1*x3*x5-x1*x3*x6-x1*x4*x6-x2*x4*x6";

const FXIC73: &str = "C^3 - C^2*(x1+x2+x3+x4+x5+x6) \
    + C*(x1*x3+x5*x3+x6*x3+x1*x4+x2*x4+x1*x5+x2*x5+x1*x6+x2*x6+x4*x6) \
    - (x1*x3*x5+x1*x3*x6+x1*x4*x6+x2*x4*x6)";

const FXIC72: &str = "3*C^2*(X^2-2) \
    - C*(2*(X^2-2)*x1 + (2*X^2-3)*(x2+x3+x4+x5) + 2*(X^2-2)*x6) \
    + X^2*x2*x5 + (X^2-2)*(x1*x3+x1*x6+x4*x6) \
    + (X^2-1)*(x1*x4+x2*x4+x1*x5+x3*x5+x2*x6+x3*x6)";

const FXIC7: &str = "C*(3*X^4-12*X^2+10) - (X^4-3*X^2+2)*(x3+x4) \
    - (X^4-3*X^2+1)*(x2+x5) - (X^4-4*X^2+3)*(x1+x6)";

const CRIT71_Q: &str = "x1^2+2*x2*x1-2*x3*x1-2*x4*x1+x2^2-x5^2-x6^2+2*x2*x3-2*x2*x4\
    +2*x3*x5-2*x4*x5+2*x3*x6+2*x4*x6-2*x5*x6";

const CON7_1: &str = "x1^3 + 3*x2*x1^2 + 4*x3*x1^2 + 4*x4*x1^2 + 3*x5*x1^2 + 3*x6*x1^2 \
    + x2^2*x1 + 2*x3^2*x1 + 2*x4^2*x1 + x5^2*x1 + 3*x6^2*x1 + 4*x2*x3*x1 + 4*x2*x4*x1 \
    + 4*x3*x4*x1 + 2*x2*x5*x1 - 28*x3*x5*x1 + 4*x4*x5*x1 + 6*x2*x6*x1 - 24*x3*x6*x1 \
    - 24*x4*x6*x1 + 6*x5*x6*x1 - x2^3 - x5^3 + x6^3 + 2*x2*x3^2 + 2*x2*x4^2 - 3*x2*x5^2 \
    + 3*x2*x6^2 + 4*x3*x6^2 + 4*x4*x6^2 + 3*x5*x6^2 + 4*x2*x3*x4 - 3*x2^2*x5 + 2*x3^2*x5 \
    + 2*x4^2*x5 + 4*x3*x4*x5 + x2^2*x6 + 2*x3^2*x6 + 2*x4^2*x6 + x5^2*x6 + 4*x2*x3*x6 \
    - 28*x2*x4*x6 + 4*x3*x4*x6 + 2*x2*x5*x6 + 4*x3*x5*x6 + 4*x4*x5*x6";

const CON7_2: &str = "5*x1^2 + 10*x2*x1 - 4*x3*x1 - 4*x4*x1 - 6*x5*x1 - 6*x6*x1 + 3*x2^2 \
    + 2*x3^2 + 2*x4^2 + 3*x5^2 + 5*x6^2 + 8*x2*x3 - 8*x2*x4 + 4*x3*x4 - 10*x2*x5 \
    - 8*x3*x5 + 8*x4*x5 - 6*x2*x6 - 4*x3*x6 - 4*x4*x6 + 10*x5*x6";

const CON7_3: &str = "5*x1^2 + 6*x2*x1 - 8*x3*x1 - 2*x5*x1 - 6*x6*x1 - x2^2 + 2*x3^2 \
    + 2*x4^2 - x5^2 + 5*x6^2 + 4*x2*x3 - 4*x2*x4 + 4*x3*x4 - 2*x2*x5 - 4*x3*x5 \
    + 4*x4*x5 - 2*x2*x6 - 8*x4*x6 + 6*x5*x6";

const CON71: &str = "x2^2 - x3^2 - x4^2 - x5^2 - 2*x6^2 - 6*x3*x2 + 2*x4*x2 + 2*x5*x2 \
    - 2*x3*x4 + 6*x3*x5 - 2*x4*x5 + 4*x3*x6 + 4*x4*x6 - 4*x5*x6";

const CRISH_1: &str = "2*C*(15*p^4+6*p^2*(5*X^2-6)+3*X^4-12*X^2+10) \
    - 2*x2-4*x3-4*x4-2*x5-6*x6 \
    - 2*x1*(p^4+p^2*(6*X^2-4)+X^4-4*X^2+3) \
    - 2*(x2+x3+x4+x5)*(p^4+p^2*(6*X^2-3)+X^4-3*X^2) \
    - 2*x6*(p^4+p^2*(6*X^2-4)+X^4-4*X^2)";

const CRISH_2: &str = "2*C*(5*p^2+3*X^2-6) - 2*(p^2+X^2-2)*(x1+x6) \
    + (3-2*(p^2+X^2))*(x2+x3+x4+x5)";

const CRISH_3: &str = "C^2*(3*X^2+15*p^2-6) - C*(2*X^2+6*p^2-4)*(x1+x6) \
    - C*(2*X^2+6*p^2-3)*(x2+x3+x4+x5) + (X^2+p^2-2)*(x1*x3+x1*x6+x4*x6) \
    + (X^2+p^2-1)*(x1*x4+x1*x5+x2*x4+x2*x6+x3*x5+x3*x6) + (X^2+p^2)*x2*x5";

const CRISH_3_PRINTED: &str = "3*C^2*(5*p^2+X^2-2) - C*(6*p^2+2*X^2-3)*(x2+x3+x4+x5) \
    - 2*C*(3*p^2+X^2-2)*(x1+x6) + (p^2+X^2-1)*(x1*x5+x2*x4+x2*x6+x3*x5+x3*x6) \
    + (p^2+X^2-2)*(x1*x3+x1*x4+x1*x6+x4*x6)";

const CRISH_4: &str = "3*C^2 - 2*C*(x1+x2+x3+x4+x5+x6) + x1*(x3+x4+x5+x6) \
    + x2*(x4+x5+x6) + x3*(x5+x6) + x4*x6";

const CRISH_5: &str = "C^3 - C^2*(x1+x2+x3+x4+x5+x6) \
    + C*(x1*(x3+x4+x5+x6) + x2*(x4+x5+x6) + x3*(x5+x6) + x4*x6) \
    - (x1*x3*(x5+x6) + (x1+x2)*x4*x6)";

const LINXI: &str = "2*(10*p^6+12*p^4*X^2-40*p^4+10*p^2*X^4-40*p^2*X^2+43*p^2+X^2-2)*(x1+x6) \
    + (20*p^6+24*p^4*X^2-75*p^4+20*p^2*X^4-66*p^2*X^2+82*p^2-3*X^4+14*X^2-18)*(x2+x5) \
    + (20*p^6+24*p^4*X^2-75*p^4+20*p^2*X^4-66*p^2*X^2+72*p^2-3*X^4+8*X^2-6)*(x3+x4)";

/// The three `p > X` configurations `(p, X)` with the positive linear forms
/// known for them.
pub const POSITIVE_FORMS: [(&str, &str, &str); 3] = [
    (
        "(sqrt(sqrt2+2)+sqrt2)/2",
        "(sqrt(sqrt2+2)-sqrt2)/2",
        "(2*(sqrt2+3)+3*sqrt(2*(sqrt2+2)))*(x1+x6) + (4*sqrt2+sqrt(46*sqrt2+68)+6)*(x2+x5) \
         + 2*(sqrt2+sqrt(7*sqrt2+10)+2)*(x3+x4)",
    ),
    (
        "(sqrt(2-sqrt2)+sqrt(sqrt2+2))/2",
        "(sqrt(sqrt2+2)-sqrt(2-sqrt2))/2",
        "(sqrt2+2)*(x1+x6) + sqrt2*(x2+x5) + 2*(sqrt2+1)*(x3+x4)",
    ),
    (
        "(sqrt2+sqrt(2-sqrt2))/2",
        "(sqrt2-sqrt(2-sqrt2))/2",
        "(6-2*sqrt2+3*sqrt(4-2*sqrt2))*(x1+x6) \
         + (6-4*sqrt2-2*sqrt(2-sqrt2)+3*sqrt(4-2*sqrt2))*(x2+x5) \
         + 2*(2-sqrt2-sqrt(2-sqrt2)+sqrt(4-2*sqrt2))*(x3+x4)",
    ),
];

/// Linear form in `ξ₁..ξ₆` with `p`, `X` fixed.
pub fn linear_form_at(form: &Symbolic, p: &Scalar, x: &Scalar) -> [Scalar; 6] {
    std::array::from_fn(|i| {
        let mut unit = vec![Scalar::int(0); 6];
        unit[i] = Scalar::int(1);
        Point::new(&unit)
            .with(P, p.clone())
            .with(X, x.clone())
            .eval(form)
            - Point::new(&[])
                .with(P, p.clone())
                .with(X, x.clone())
                .eval(form)
    })
}

/// Solves two linear equations in `ξ₅, ξ₆` (coefficients affine in the other
/// `ξ`) and returns `ξ₅`, `ξ₆` as linear forms in `ξ₁..ξ₄`.
pub fn eliminate_xi56(eqs: [&Symbolic; 2]) -> Result<[Symbolic; 2], CriteriaError> {
    let coeff = |e: &Symbolic, var: usize| -> Result<Scalar, CriteriaError> {
        let parts = e.collect_in(var);
        if parts.len() > 2 {
            return Err(CriteriaError::Internal(
                "equation is not linear in ξ₅, ξ₆".into(),
            ));
        }
        parts.get(1).map_or(Ok(Scalar::int(0)), |c| {
            c.as_constant()
                .ok_or_else(|| CriteriaError::Internal("nonconstant coefficient".into()))
        })
    };
    let rest = |e: &Symbolic| {
        e.substitute(4, &Symbolic::zero())
            .substitute(5, &Symbolic::zero())
    };
    let a = vec![
        vec![coeff(eqs[0], 4)?, coeff(eqs[0], 5)?],
        vec![coeff(eqs[1], 4)?, coeff(eqs[1], 5)?],
    ];
    let b = vec![-rest(eqs[0]), -rest(eqs[1])];
    let sol = crate::algebra::solve_linear_symbolic(a, b)?;
    Ok([sol[0].clone(), sol[1].clone()])
}

fn all_rational(xi: &XiVector) -> bool {
    xi.entries()
        .iter()
        .all(|x| matches!(x, Scalar::Rational(_)))
}

fn mismatch(what: &str) -> CriteriaError {
    CriteriaError::Internal(format!("{what} disagrees with the generic residual system"))
}

/// Asserts that the literal origin system agrees with the generic one.
///
/// The simplified two-branch condition exists for `X = √2` only and is compared
/// for rational `ξ`.
pub(super) fn check_origin_literals(
    xi: &XiVector,
    k: usize,
    c: &Scalar,
    residuals: &[Scalar],
    mode: Mode,
) -> Result<(), CriteriaError> {
    if !mode.is_exact() || !xi.is_exact() {
        return Ok(());
    }
    let lits = literals();
    let pt = Point::new(xi.entries());
    if pt.eval(&lits.origin_c[k - 1]) != *c {
        return Err(mismatch("explicit formula for C"));
    }
    let x = crate::reciprocal::focus(7, k);
    let at = pt.with(C, c.clone()).with(X, x);
    if !at.eval(&lits.fxic[0]).is_zero() {
        return Err(mismatch("linear equation for C"));
    }
    let vanish = residuals.iter().all(Ring::is_zero);
    let literal = lits.fxic[1..].iter().all(|e| at.eval(e).is_zero());
    if literal != vanish {
        return Err(mismatch("literal origin system"));
    }
    if k == 2 && all_rational(xi) {
        let simplified = at.eval(&lits.crit71).is_zero()
            || lits.crit71_pair.iter().all(|e| at.eval(e).is_zero());
        if simplified != vanish {
            return Err(mismatch("simplified origin condition"));
        }
    }
    Ok(())
}

/// The concentric condition in simplified two-branch form.
pub fn concentric_simplified(xi: &[Scalar]) -> bool {
    let lits = literals();
    let pt = Point::new(xi);
    let zero = |e: &Symbolic| pt.eval(e).is_zero();
    lits.con71.iter().all(zero)
        || (zero(&lits.crit71_pair[1]) && zero(&lits.con7[0]) && zero(&lits.con7[1]))
}

/// Asserts that the literal concentric systems agree with the generic one.
pub(super) fn check_concentric_literals(
    xi: &XiVector,
    residuals: &[Scalar],
    mode: Mode,
) -> Result<(), CriteriaError> {
    if !mode.is_exact() || !xi.is_exact() {
        return Ok(());
    }
    let lits = literals();
    let pt = Point::new(xi.entries());
    let vanish = residuals.iter().all(Ring::is_zero);
    if lits.con7.iter().all(|e| pt.eval(e).is_zero()) != vanish {
        return Err(mismatch("literal concentric system"));
    }
    if all_rational(xi) && concentric_simplified(xi.entries()) != vanish {
        return Err(mismatch("simplified concentric condition"));
    }
    Ok(())
}

/// Asserts the exact relations between the generic shifted-pair coefficients
/// and the literal equations: `e₂ = eq₁`, `o₁ = 4p·eq₂`, `e₁ = 2·eq₃`,
/// `o₀ = 4p·eq₄`, `e₀ = 2·eq₅`.
pub(super) fn check_shifted_literals(
    xi: &XiVector,
    p: &Scalar,
    x: &Scalar,
    c: &Scalar,
    even: &[Scalar],
    odd: &[Scalar],
    mode: Mode,
) -> Result<(), CriteriaError> {
    if !mode.is_exact() || !xi.is_exact() || even.len() < 3 || odd.len() < 2 {
        return Ok(());
    }
    let lits = literals();
    let at = Point::new(xi.entries())
        .with(P, p.clone())
        .with(X, x.clone())
        .with(C, c.clone());
    let eq: Vec<Scalar> = lits.crish.iter().map(|e| at.eval(e)).collect();
    let four_p = Scalar::int(4) * p.clone();
    let two = Scalar::int(2);
    let checks = [
        (even[2].clone(), eq[0].clone()),
        (odd[1].clone(), four_p.clone() * eq[1].clone()),
        (even[1].clone(), two.clone() * eq[2].clone()),
        (odd[0].clone(), four_p * eq[3].clone()),
        (even[0].clone(), two * eq[4].clone()),
    ];
    if checks.iter().any(|(a, b)| a != b) {
        return Err(mismatch("literal shifted-pair system"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_literals_parse() {
        let l = literals();
        assert_eq!(l.p7.total_degree(), 3);
        assert!(l.con7[0].is_homogeneous(3));
        assert!(l.con7[1].is_homogeneous(2));
        for (p, x, form) in POSITIVE_FORMS {
            constant(p);
            constant(x);
            parse(form).unwrap();
        }
    }

    #[test]
    fn con7_difference_factors() {
        let l = literals();
        let diff = l.con7[1].clone() - l.con7[2].clone();
        let expected = lit("4*(x1+x2-x5-x6)*(x2+x3-x4-x5)");
        assert_eq!(diff, expected);
    }
}
