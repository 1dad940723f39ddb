//! Exact integer/rational arithmetic and the closed-form combinatorial
//! quantities entering the divisor-class computation.
//!
//! Everything here is a pure function on arbitrary-precision values
//! ([`num_bigint::BigInt`] / [`num_rational::BigRational`]); results are
//! always reduced rationals with positive denominator, so equality is
//! structural. There is no floating-point fallback.
//!
//! Throughout, `k` parametrizes the even genus `g = 2k`, the covers have
//! degree `k + 1`, and `N = C(2k, k+1)/k` is the Catalan number counting
//! the degree-`(k+1)` pencils on a general genus-`2k` curve.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision integer, the scalar for all exact counts.
pub type Integer = BigInt;

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = BigRational;

/// Integer literal helper.
pub fn int(n: i64) -> Integer {
    BigInt::from(n)
}

/// Rational from an integer numerator and denominator; panics on zero denominator.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(int(n), int(d))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(int(n))
}

/// Renders a rational as `p/q`, or just `n` when it is integral.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q` or a bare integer `n` back into a rational.
pub fn rational_from_str(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("not an integer: {t:?}")))
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let denom = parse_int(q)?;
            if denom.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(parse_int(p)?, denom))
        }
    }
}

/// Binomial coefficient `C(n, r)`, zero when `r < 0` or `r > n`.
pub fn binomial(n: u64, r: i64) -> Integer {
    if r < 0 || r as u64 > n {
        return Integer::zero();
    }
    let r = (r as u64).min(n - r as u64);
    let mut acc = Integer::one();
    for i in 0..r {
        acc = acc * int((n - i) as i64) / int((i + 1) as i64);
    }
    acc
}

/// Factorial `n!`.
pub fn factorial(n: u64) -> Integer {
    let mut acc = Integer::one();
    for i in 2..=n {
        acc *= int(i as i64);
    }
    acc
}

/// The Catalan number `N = C(2k, k+1)/k`, the number of degree-`(k+1)`
/// pencils on a general curve of genus `2k`. Rejects `k = 0`.
pub fn catalan_n(k: u64) -> Result<Integer> {
    if k == 0 {
        return Err(Error::InvalidArgument("catalan_n requires k >= 1".into()));
    }
    let (q, r) = binomial(2 * k, (k + 1) as i64).div_rem(&int(k as i64));
    debug_assert!(r.is_zero());
    Ok(q)
}

/// The combinatorial coefficient `α(k, j)` entering the `δ_j`-coefficient
/// of the `D_2` class, with separate closed forms for even and odd `j`.
///
/// Even `j`:  `(j(2k−j)+k)/(k(k+1)) · C(j, j/2) · C(2k−j, k−j/2)`.
/// Odd  `j`:  `((j+1)(2k−j))/(k(k+1)) · C(j+1, 1+⌊j/2⌋) · C(2k−j−1, k−1−⌊j/2⌋)`.
pub fn alpha(k: u64, j: u64) -> Result<Rational> {
    check_j_range(k, j)?;
    let (k_i, j_i) = (k as i64, j as i64);
    let half = (j / 2) as i64;
    let value = if j.is_multiple_of(2) {
        Rational::new(int(j_i * (2 * k_i - j_i) + k_i), int(k_i * (k_i + 1)))
            * binomial(j, half)
            * binomial(2 * k - j, k_i - half)
    } else {
        Rational::new(int((j_i + 1) * (2 * k_i - j_i)), int(k_i * (k_i + 1)))
            * binomial(j + 1, 1 + half)
            * binomial(2 * k - j - 1, k_i - 1 - half)
    };
    Ok(value)
}

/// The `i`-th moment of the restricted-degree distribution over `Δ_j`:
///
/// `A_i(j) = (1/((j+1)(2k+1−j))) · Σ_{c=0}^{⌊j/2⌋} (j+1−2c)^i C(j+1, c) C(2k−j+1, k+1−c)`.
///
/// `A_2(j) = N`, `A_3(j) = α(k, j)` and `A_4(j) = (1 + 3j(2k−j)/(2k−1))N`
/// hold identically; the `verify` suite checks them.
pub fn moment_a(k: u64, j: u64, i: u32) -> Result<Rational> {
    check_j_range(k, j)?;
    if i == 0 {
        return Err(Error::InvalidArgument("moment_a requires i >= 1".into()));
    }
    let mut sum = Integer::zero();
    for c in 0..=(j / 2) {
        let m = int((j + 1 - 2 * c) as i64);
        sum += m.pow(i) * binomial(j + 1, c as i64) * binomial(2 * k - j + 1, (k + 1 - c) as i64);
    }
    Ok(Rational::new(sum, int(((j + 1) * (2 * k + 1 - j)) as i64)))
}

/// The four pencil counts on a general curve of genus `2k − 1`:
/// `a` pencils of degree `k+1` doubly ramified at a general point,
/// `b` pencils of type `(3)`, `c` pairs `(γ, q)` with `γ ≥ p + 2q`,
/// `d` pencils of type `(2,2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarrisCounts {
    pub a: Integer,
    pub b: Integer,
    pub c: Integer,
    pub d: Integer,
}

/// Evaluates the four printed pencil-count formulas:
/// `a = C(2k,k+1)/k`, `b = 12(k−1)a`, `c = 5(k−1)a`, `d = 12(k−1)(k−2)a`.
pub fn harris_pencil_counts(k: u64) -> Result<HarrisCounts> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "harris_pencil_counts requires k >= 1".into(),
        ));
    }
    let a = catalan_n(k)?;
    let k_i = k as i64;
    Ok(HarrisCounts {
        b: int(12 * (k_i - 1)) * &a,
        c: int(5 * (k_i - 1)) * &a,
        d: int(12 * (k_i - 1) * (k_i - 2)) * &a,
        a,
    })
}

/// Degree of the restriction of the moduli map to the boundary divisor
/// `E_{j,c}`, divided by `(6k)!`:
///
/// `(j+1−2c)² C(j+1, c) C(2k−j+1, k+1−c) / ((j+1)(2k−j+1))`.
///
/// Multiply by [`factorial`]`(6k)` to recover the raw degree.
pub fn restricted_degree_normalized(k: u64, j: u64, c: u64) -> Result<Rational> {
    check_j_range(k, j)?;
    if c > j / 2 {
        return Err(Error::InvalidArgument(format!(
            "restricted_degree_normalized requires 0 <= c <= j/2, got c={c} with j={j}"
        )));
    }
    let m = int((j + 1 - 2 * c) as i64);
    let numer = &m * &m * binomial(j + 1, c as i64) * binomial(2 * k - j + 1, (k + 1 - c) as i64);
    Ok(Rational::new(numer, int(((j + 1) * (2 * k - j + 1)) as i64)))
}

/// Degree of the moduli map restricted to `E_0`, divided by `(6k)!`:
/// half the generic degree, i.e. `N/2`.
pub fn e0_degree_normalized(k: u64) -> Result<Rational> {
    Ok(Rational::new(catalan_n(k)?, int(2)))
}

/// Brill–Noether number `ρ = g − (r+1)(g + r − d)`.
pub fn brill_noether_rho(g: u64, r: u64, d: u64) -> Integer {
    let (g, r, d) = (g as i64, r as i64, d as i64);
    int(g - (r + 1) * (g + r - d))
}

/// Checks the two counting inequalities that let a general point avoid
/// the excluded pencil configurations:
///
/// - `k·d(k) > (k−2)·c(k)`, and
/// - `k·b(k) > (k−1)·a(k) + c(k)`,
///
/// where the second bounds the set of doubly-ramified residual points by
/// `c(k)` (each of the `c(k)` pairs contributes at most one point).
pub fn general_position_inequalities(k: u64) -> Result<bool> {
    if k < 3 {
        return Err(Error::InvalidArgument(
            "general_position_inequalities requires k >= 3".into(),
        ));
    }
    let counts = harris_pencil_counts(k)?;
    let k_i = int(k as i64);
    let first = &k_i * &counts.d > int(k as i64 - 2) * &counts.c;
    let second = &k_i * &counts.b > int(k as i64 - 1) * &counts.a + &counts.c;
    Ok(first && second)
}

fn check_j_range(k: u64, j: u64) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be >= 1".into()));
    }
    if j < 1 || j > k {
        return Err(Error::InvalidArgument(format!(
            "j must lie in 1..=k, got j={j} with k={k}"
        )));
    }
    Ok(())
}

/// Sign of a rational as -1, 0, or 1.
pub fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(6, 4), int(15));
        assert_eq!(binomial(2, 0), int(1));
        assert_eq!(binomial(5, 7), int(0));
        assert_eq!(binomial(5, -1), int(0));
        assert_eq!(binomial(0, 0), int(1));
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan_n(1).unwrap(), int(1));
        assert_eq!(catalan_n(3).unwrap(), int(5));
        assert_eq!(catalan_n(4).unwrap(), int(14));
        assert!(catalan_n(0).is_err());
    }

    #[test]
    fn catalan_dual_form() {
        // C(2k, k+1)/k == C(2k, k)/(k+1), both integral.
        for k in 1..=200u64 {
            let n = catalan_n(k).unwrap();
            let (q, r) = binomial(2 * k, k as i64).div_rem(&int(k as i64 + 1));
            assert!(r.is_zero(), "k={k}");
            assert_eq!(n, q, "k={k}");
        }
    }

    #[test]
    fn alpha_values() {
        assert_eq!(alpha(1, 1).unwrap(), rat_int(2));
        assert_eq!(alpha(3, 2).unwrap(), rat_int(11));
        assert_eq!(alpha(2, 1).unwrap(), rat_int(4));
        assert!(alpha(3, 0).is_err());
        assert!(alpha(3, 4).is_err());
    }

    #[test]
    fn moment_values() {
        assert_eq!(moment_a(3, 2, 2).unwrap(), rat_int(5));
        assert_eq!(moment_a(3, 1, 4).unwrap(), rat_int(20));
        assert_eq!(moment_a(3, 2, 3).unwrap(), rat_int(11));
        assert!(moment_a(3, 5, 2).is_err());
        assert!(moment_a(3, 1, 0).is_err());
    }

    #[test]
    fn moments_match_closed_forms() {
        for k in 1..=25u64 {
            let n = Rational::from_integer(catalan_n(k).unwrap());
            for j in 1..=k {
                assert_eq!(moment_a(k, j, 2).unwrap(), n, "A_2 at k={k} j={j}");
                assert_eq!(
                    moment_a(k, j, 3).unwrap(),
                    alpha(k, j).unwrap(),
                    "A_3 at k={k} j={j}"
                );
                let factor = rat_int(1)
                    + rat(3, 1) * rat((j * (2 * k - j)) as i64, (2 * k - 1) as i64);
                assert_eq!(moment_a(k, j, 4).unwrap(), factor * &n, "A_4 at k={k} j={j}");
            }
        }
    }

    #[test]
    fn harris_counts_values() {
        let h3 = harris_pencil_counts(3).unwrap();
        assert_eq!((h3.a, h3.b, h3.c, h3.d), (int(5), int(120), int(50), int(120)));
        let h2 = harris_pencil_counts(2).unwrap();
        assert_eq!((h2.a, h2.b, h2.c, h2.d), (int(2), int(24), int(10), int(0)));
    }

    #[test]
    fn harris_counts_ratios() {
        for k in 1..=200u64 {
            let h = harris_pencil_counts(k).unwrap();
            let k_i = k as i64;
            assert_eq!(h.b, int(12 * (k_i - 1)) * &h.a);
            assert_eq!(h.c, int(5 * (k_i - 1)) * &h.a);
            assert_eq!(h.d, int(12 * (k_i - 1) * (k_i - 2)) * &h.a);
            assert!(!h.a.is_negative() && !h.b.is_negative());
            assert!(!h.c.is_negative() && !h.d.is_negative());
        }
    }

    #[test]
    fn restricted_degree_values() {
        assert_eq!(restricted_degree_normalized(3, 1, 0).unwrap(), rat_int(5));
        assert_eq!(restricted_degree_normalized(3, 2, 0).unwrap(), rat_int(3));
        assert_eq!(restricted_degree_normalized(3, 2, 1).unwrap(), rat_int(2));
        assert!(restricted_degree_normalized(3, 2, 2).is_err());
    }

    #[test]
    fn restricted_degrees_sum_to_catalan() {
        for k in 1..=25u64 {
            let n = Rational::from_integer(catalan_n(k).unwrap());
            for j in 1..=k {
                let mut sum = Rational::zero();
                for c in 0..=(j / 2) {
                    sum += restricted_degree_normalized(k, j, c).unwrap();
                }
                assert_eq!(sum, n, "k={k} j={j}");
            }
        }
    }

    #[test]
    fn e0_degree_values() {
        assert_eq!(e0_degree_normalized(3).unwrap(), rat(5, 2));
        assert_eq!(e0_degree_normalized(1).unwrap(), rat(1, 2));
        assert_eq!(e0_degree_normalized(4).unwrap(), rat_int(7));
    }

    #[test]
    fn brill_noether_values() {
        assert_eq!(brill_noether_rho(6, 1, 4), int(0));
        assert_eq!(brill_noether_rho(0, 1, 1), int(0));
        assert_eq!(brill_noether_rho(4, 1, 3), int(0));
        // For g = 2k, r = 1, d = k+1 the number vanishes identically.
        for k in 1..=50u64 {
            assert_eq!(brill_noether_rho(2 * k, 1, k + 1), int(0));
        }
    }

    #[test]
    fn general_position_holds() {
        // k = 3 components: k*d = 360 vs (k-2)*c = 50, and k*b = 360 vs (k-1)*a + c = 60.
        let h = harris_pencil_counts(3).unwrap();
        assert_eq!(int(3) * &h.d, int(360));
        assert_eq!(int(1) * &h.c, int(50));
        assert_eq!(int(3) * &h.b, int(360));
        assert_eq!(int(2) * &h.a + &h.c, int(60));
        for k in 3..=200u64 {
            assert!(general_position_inequalities(k).unwrap(), "k={k}");
        }
        assert!(general_position_inequalities(2).is_err());
    }

    #[test]
    fn rational_string_round_trip() {
        for r in [rat(5, 2), rat(-7, 3), rat_int(12), rat_int(0), rat_int(-4)] {
            let s = rational_to_string(&r);
            assert_eq!(rational_from_str(&s).unwrap(), r);
        }
        assert_eq!(rational_to_string(&rat(5, 2)), "5/2");
        assert_eq!(rational_to_string(&rat_int(3)), "3");
        assert!(rational_from_str("1/0").is_err());
        assert!(rational_from_str("x").is_err());
    }
}
