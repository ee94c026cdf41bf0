use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{common_denominator, gcd_all, Int, UniPoly};

/// Integer polynomial, lowest degree first, stored together with its content.
///
/// `content * primitive` reproduces the original polynomial. The content
/// carries the sign of the leading coefficient, so the primitive part always
/// has a positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    content: Int,
    primitive: Vec<Int>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return IntPoly { content: Int::zero(), primitive: Vec::new() };
        }
        let mut content = gcd_all(&coeffs);
        if coeffs.last().unwrap().is_negative() {
            content = -content;
        }
        let primitive = coeffs.iter().map(|c| c / &content).collect();
        IntPoly { content, primitive }
    }

    /// Clear denominators of a rational polynomial: returns `(d, P)` with
    /// `d * p == P` and `d > 0` the lcm of the coefficient denominators.
    pub fn from_rational(p: &UniPoly) -> (Int, IntPoly) {
        let d = common_denominator(p.coeffs());
        let coeffs = p.coeffs().iter().map(|c| (c * &d).to_integer()).collect();
        (d, IntPoly::new(coeffs))
    }

    pub fn content(&self) -> &Int {
        &self.content
    }

    pub fn primitive(&self) -> &[Int] {
        &self.primitive
    }

    pub fn coeffs(&self) -> Vec<Int> {
        self.primitive.iter().map(|c| c * &self.content).collect()
    }

    pub fn degree(&self) -> Option<usize> {
        self.primitive.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.primitive.is_empty()
    }

    pub fn to_rational(&self) -> UniPoly {
        UniPoly::from_int_coeffs(&self.coeffs())
    }
}

// Helpers on raw integer coefficient vectors (lowest degree first) used by the
// factorization code.

pub(crate) fn trim(v: &mut Vec<Int>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

pub(crate) fn primitive_part(v: &[Int]) -> Vec<Int> {
    let mut g = gcd_all(v);
    if g.is_zero() {
        return Vec::new();
    }
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    v.iter().map(|c| c / &g).collect()
}

pub(crate) fn mul(a: &[Int], b: &[Int]) -> Vec<Int> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Int::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact quotient `a / b` over the integers, `None` if `b` does not divide `a`.
pub(crate) fn exact_div(a: &[Int], b: &[Int]) -> Option<Vec<Int>> {
    let db = b.len().checked_sub(1)?;
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let lc = &b[db];
    let mut rem = a.to_vec();
    let mut quot = vec![Int::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let (c, r) = rem[k + db].div_rem(lc);
        if !r.is_zero() {
            return None;
        }
        if c.is_zero() {
            continue;
        }
        for (j, d) in b.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        quot[k] = c;
    }
    rem.iter().all(Zero::is_zero).then_some(quot)
}

/// `v^n * f(u/v)` for `f` of nominal degree `n = len - 1`.
pub(crate) fn eval_homogeneous(f: &[Int], u: &Int, v: &Int) -> Int {
    let mut acc = Int::zero();
    let mut vpow = Int::one();
    // Horner in u with a running power of v for the lower terms.
    for c in f.iter().rev() {
        acc = acc * u + c * &vpow;
        vpow *= v;
    }
    acc
}

/// Ceiling of the Euclidean norm.
pub(crate) fn norm2_ceil(v: &[Int]) -> Int {
    let sq: Int = v.iter().map(|c| c * c).sum();
    let r = sq.sqrt();
    if &r * &r == sq {
        r
    } else {
        r + 1
    }
}

/// Symmetric residue of `c` modulo `m`, in `(-m/2, m/2]`.
pub(crate) fn symmetric_mod(c: &Int, m: &Int) -> Int {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}
