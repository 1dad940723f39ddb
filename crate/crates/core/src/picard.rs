//! Divisor-class vectors on the rational Picard group of the moduli
//! space of stable curves of genus `2k`, and the two independent
//! computations of the class of the Hurwitz divisor `D_2`.
//!
//! A class is stored as its coefficient vector in the basis
//! `λ, δ_0, …, δ_k`. The closed-form route ([`d2_class_theorem`])
//! evaluates the coefficient formulas directly; the pushforward route
//! ([`d2_class_pipeline`]) starts from the expression of the Hodge class
//! on the compactified Hurwitz space as a weighted sum of boundary
//! divisors, pushes every term forward with its known degree, and solves
//! for `[D_2]`. The weights are computed by [`kkz_coefficient`] from the
//! ramification profile over the node, and the bookkeeping of divisors,
//! profiles, weights and degrees is materialized in
//! [`pushforward_ledger`].

use num_integer::Integer as _;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exactcomb::{
    alpha, catalan_n, e0_degree_normalized, int, moment_a, rat, rat_int, rational_from_str,
    rational_to_string, restricted_degree_normalized, Rational,
};
use crate::{Error, Result};

/// A divisor class `c_λ·λ + Σ_{j=0}^k c_j·δ_j` on the moduli space of
/// stable curves of genus `2k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClass {
    k: u64,
    c_lambda: Rational,
    c_delta: Vec<Rational>,
}

impl DivisorClass {
    /// Builds a class from its coefficients; `c_delta` must have exactly
    /// `k + 1` entries (for `δ_0, …, δ_k`).
    pub fn new(k: u64, c_lambda: Rational, c_delta: Vec<Rational>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("divisor class requires k >= 1".into()));
        }
        if c_delta.len() != (k + 1) as usize {
            return Err(Error::InvalidArgument(format!(
                "expected {} delta coefficients for k={k}, got {}",
                k + 1,
                c_delta.len()
            )));
        }
        Ok(DivisorClass { k, c_lambda, c_delta })
    }

    /// The zero class for genus `2k`.
    pub fn zero(k: u64) -> Result<Self> {
        DivisorClass::new(k, Rational::zero(), vec![Rational::zero(); (k + 1) as usize])
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// The genus `2k`.
    pub fn genus(&self) -> u64 {
        2 * self.k
    }

    pub fn c_lambda(&self) -> &Rational {
        &self.c_lambda
    }

    /// Coefficient of `δ_j`.
    pub fn c_delta(&self, j: u64) -> Option<&Rational> {
        self.c_delta.get(j as usize)
    }

    /// All boundary coefficients, `δ_0` first.
    pub fn deltas(&self) -> &[Rational] {
        &self.c_delta
    }

    pub fn is_zero(&self) -> bool {
        self.c_lambda.is_zero() && self.c_delta.iter().all(Rational::is_zero)
    }

    /// Componentwise sum; both classes must live on the same moduli space.
    pub fn add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        if self.k != other.k {
            return Err(Error::InvalidArgument(format!(
                "cannot add classes with k={} and k={}",
                self.k, other.k
            )));
        }
        let c_delta = self
            .c_delta
            .iter()
            .zip(&other.c_delta)
            .map(|(a, b)| a + b)
            .collect();
        DivisorClass::new(self.k, &self.c_lambda + &other.c_lambda, c_delta)
    }

    /// Scalar multiple.
    pub fn scale(&self, factor: &Rational) -> DivisorClass {
        DivisorClass {
            k: self.k,
            c_lambda: &self.c_lambda * factor,
            c_delta: self.c_delta.iter().map(|c| c * factor).collect(),
        }
    }

    /// Stable JSON rendering with rationals as `"p/q"` strings.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("divisor class serializes")
    }

    /// Parses the JSON produced by [`DivisorClass::to_json_string`].
    pub fn from_json_str(s: &str) -> Result<DivisorClass> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("divisor class JSON: {e}")))
    }
}

#[derive(Serialize, Deserialize)]
struct DivisorClassRepr {
    genus: u64,
    lambda: String,
    delta: Vec<String>,
}

impl Serialize for DivisorClass {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DivisorClassRepr {
            genus: self.genus(),
            lambda: rational_to_string(&self.c_lambda),
            delta: self.c_delta.iter().map(rational_to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DivisorClass {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = DivisorClassRepr::deserialize(deserializer)?;
        if repr.genus == 0 || repr.genus % 2 != 0 {
            return Err(D::Error::custom(format!("genus must be even positive, got {}", repr.genus)));
        }
        let k = repr.genus / 2;
        let c_lambda = rational_from_str(&repr.lambda).map_err(D::Error::custom)?;
        let c_delta = repr
            .delta
            .iter()
            .map(|s| rational_from_str(s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        DivisorClass::new(k, c_lambda, c_delta).map_err(D::Error::custom)
    }
}

/// Ramification data of a boundary divisor of the Hurwitz space: the
/// number `b2` of marked branch points on the component carrying the
/// partition, and the ramification orders `mu` over the node, with their
/// least common multiple cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryProfile {
    b2: u64,
    mu: Vec<u64>,
    m: u64,
}

impl BoundaryProfile {
    /// Builds a profile; parts must be positive. Parts are stored weakly
    /// decreasing.
    pub fn new(b2: u64, mut mu: Vec<u64>) -> Result<Self> {
        if mu.is_empty() || mu.contains(&0) {
            return Err(Error::InvalidArgument(
                "ramification profile needs positive parts".into(),
            ));
        }
        mu.sort_unstable_by(|a, b| b.cmp(a));
        let m = mu.iter().fold(1u64, |acc, &p| acc.lcm(&p));
        Ok(BoundaryProfile { b2, mu, m })
    }

    /// Profile of `E_0`: `6k − 2` points on the main component, fibre
    /// `(1^{k+1})` over the node.
    pub fn e0(k: u64) -> Result<Self> {
        BoundaryProfile::new(6 * k - 2, vec![1; (k + 1) as usize])
    }

    /// Profile of `E_2` (two double points over the node): `(2, 2, 1^{k−3})`.
    /// Only defined for `k ≥ 3`; the divisor is empty below that.
    pub fn e2(k: u64) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidArgument(
                "the E_2 profile (2,2,1^(k-3)) needs k >= 3".into(),
            ));
        }
        let mut mu = vec![2, 2];
        mu.extend(std::iter::repeat_n(1, (k - 3) as usize));
        BoundaryProfile::new(6 * k - 2, mu)
    }

    /// Profile of `E_3` (one triple point over the node): `(3, 1^{k−2})`.
    pub fn e3(k: u64) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidArgument(
                "the E_3 profile (3,1^(k-2)) needs k >= 2".into(),
            ));
        }
        let mut mu = vec![3];
        mu.extend(std::iter::repeat_n(1, (k - 2) as usize));
        BoundaryProfile::new(6 * k - 2, mu)
    }

    /// Profile of `E_{j,c}`: `3j` points on the small component, fibre
    /// `(j+1−2c, 1^{k−j+2c})` over the node.
    pub fn ejc(k: u64, j: u64, c: u64) -> Result<Self> {
        if j < 1 || j > k || c > j / 2 {
            return Err(Error::InvalidArgument(format!(
                "E_(j,c) profile needs 1 <= j <= k, 0 <= c <= j/2; got j={j}, c={c}, k={k}"
            )));
        }
        let mut mu = vec![j + 1 - 2 * c];
        mu.extend(std::iter::repeat_n(1, (k - j + 2 * c) as usize));
        BoundaryProfile::new(3 * j, mu)
    }

    pub fn b2(&self) -> u64 {
        self.b2
    }

    /// Ramification orders over the node, weakly decreasing.
    pub fn mu(&self) -> &[u64] {
        &self.mu
    }

    /// Least common multiple of the parts.
    pub fn multiplicity(&self) -> u64 {
        self.m
    }
}

/// Hodge-class weight of a boundary divisor with the given profile:
///
/// `m(μ) · [ b2(6k − b2)/(8(6k−1)) − (1/12)(k + 1 − Σ_i 1/m_i) ]`.
///
/// The profile must partition the fibre degree `k + 1` and satisfy
/// `b2 ≤ 6k`.
pub fn kkz_coefficient(k: u64, profile: &BoundaryProfile) -> Result<Rational> {
    if k == 0 {
        return Err(Error::InvalidArgument("kkz_coefficient requires k >= 1".into()));
    }
    let total: u64 = profile.mu.iter().sum();
    if total != k + 1 {
        return Err(Error::InvalidArgument(format!(
            "profile parts sum to {total}, expected k+1 = {}",
            k + 1
        )));
    }
    if profile.b2 > 6 * k {
        return Err(Error::InvalidArgument(format!(
            "b2 = {} exceeds the number of branch points 6k = {}",
            profile.b2,
            6 * k
        )));
    }
    let recip: Rational = profile.mu.iter().map(|&m| rat(1, m as i64)).sum();
    Ok(kkz_coefficient_raw(k, profile.b2, profile.m, &recip))
}

/// The same weight from raw profile data `(b2, m(μ), Σ 1/m_i)`, without
/// validating that a genuine partition realizes it. This is what makes
/// the `E_2` weight meaningful at `k = 2`, where the divisor is empty:
/// `Σ 1/m_i = k − 2` continues to hold formally.
pub fn kkz_coefficient_raw(k: u64, b2: u64, m: u64, recip_sum: &Rational) -> Rational {
    let quad = Rational::new(
        int((b2 * (6 * k - b2)) as i64),
        int((8 * (6 * k - 1)) as i64),
    );
    let defect = rat(1, 12) * (rat_int((k + 1) as i64) - recip_sum);
    rat_int(m as i64) * (quad - defect)
}

/// Both printed forms of the class of `D_3` (valid for `k ≥ 2`):
///
/// - `12 (2k−3)!/((k+1)!(k−2)!) · [ (12k²+46k−8)λ − b_0δ_0 − Σ b_jδ_j ]`
/// - `3N/(2k−1) · [ 2(k+4)(6k−1)λ − b_0δ_0 − Σ b_jδ_j ]`
///
/// with `b_0 = 2k²+4k−1` and `b_j = 2j(2k−j)(3k+2)`. The two evaluations
/// must coincide; the common value is returned.
pub fn d3_class(k: u64) -> Result<DivisorClass> {
    if k < 2 {
        return Err(Error::InvalidArgument("d3_class requires k >= 2".into()));
    }
    let k_i = k as i64;
    let body_lambda_1 = rat_int(12 * k_i * k_i + 46 * k_i - 8);
    let body_lambda_2 = rat_int(2 * (k_i + 4) * (6 * k_i - 1));
    let b0 = rat_int(2 * k_i * k_i + 4 * k_i - 1);
    let bj = |j: i64| rat_int(2 * j * (2 * k_i - j) * (3 * k_i + 2));

    let fact = crate::exactcomb::factorial;
    let prefactor_1 = Rational::new(int(12) * fact(2 * k - 3), fact(k + 1) * fact(k - 2));
    let prefactor_2 = Rational::new(int(3) * catalan_n(k)?, int(2 * k_i - 1));

    let build = |prefactor: &Rational, body_lambda: &Rational| -> Result<DivisorClass> {
        let mut c_delta = vec![-(&b0 * prefactor)];
        for j in 1..=k_i {
            c_delta.push(-(bj(j) * prefactor));
        }
        DivisorClass::new(k, body_lambda * prefactor, c_delta)
    };
    let form_1 = build(&prefactor_1, &body_lambda_1)?;
    let form_2 = build(&prefactor_2, &body_lambda_2)?;
    assert_eq!(form_1, form_2, "the two printed forms of [D_3] must agree");
    Ok(form_1)
}

/// The class of `D_2` from the closed coefficient formulas:
///
/// - `c_λ = 6N (6k−1)(k−2)(k+3)/(2k−1)`
/// - `c_0 = −2N (k−2)(3k²+4k−1)/(2k−1)`
/// - `c_j = −3N j(2k−j)(6k²−4k−7)/(2k−1) + (9/2) j(2k−j) α(k,j)` for `1 ≤ j ≤ k`.
pub fn d2_class_theorem(k: u64) -> Result<DivisorClass> {
    if k == 0 {
        return Err(Error::InvalidArgument("d2_class_theorem requires k >= 1".into()));
    }
    let k_i = k as i64;
    let n = Rational::from_integer(catalan_n(k)?);
    let c_lambda =
        rat_int(6) * &n * rat(6 * k_i - 1, 2 * k_i - 1) * rat_int((k_i - 2) * (k_i + 3));
    let c0 = rat(-2, 1) * &n * rat((k_i - 2) * (3 * k_i * k_i + 4 * k_i - 1), 2 * k_i - 1);
    let mut c_delta = vec![c0];
    for j in 1..=k_i {
        let jj = rat_int(j * (2 * k_i - j));
        let linear = rat(-3, 1) * &n * &jj * rat(6 * k_i * k_i - 4 * k_i - 7, 2 * k_i - 1);
        let combinatorial = rat(9, 2) * &jj * alpha(k, j as u64)?;
        c_delta.push(linear + combinatorial);
    }
    DivisorClass::new(k, c_lambda, c_delta)
}

/// Identifies one summand of the Hodge-class pushforward.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivisorLabel {
    E0,
    E2,
    E3,
    Ejc { j: u64, c: u64 },
}

impl std::fmt::Display for DivisorLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DivisorLabel::E0 => write!(f, "E0"),
            DivisorLabel::E2 => write!(f, "E2"),
            DivisorLabel::E3 => write!(f, "E3"),
            DivisorLabel::Ejc { j, c } => write!(f, "E({j},{c})"),
        }
    }
}

/// Pushforward of a boundary divisor, normalized by `(6k)!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PushforwardImage {
    /// A rational multiple of a single boundary class `δ_j`.
    DeltaMultiple { j: u64, coeff: Rational },
    /// Half the known class of `D_3`.
    HalfD3(DivisorClass),
    /// Half the unknown class of `D_2`, the quantity solved for.
    HalfD2Unknown,
}

/// One row of the pushforward bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerEntry {
    pub label: DivisorLabel,
    /// Ramification profile over the node. `None` only for `E_2` at
    /// `k = 2`, where the divisor is empty and no partition realizes the
    /// formal profile; the weight is still the closed-form value.
    pub profile: Option<BoundaryProfile>,
    /// `m(μ)`: 1 for `E_0`, 2 for `E_2`, 3 for `E_3`, `j+1−2c` for `E_{j,c}`.
    pub multiplicity: u64,
    /// Hodge-class weight of this divisor.
    pub kkz: Rational,
    /// `(6k)!`-normalized pushforward.
    pub image: PushforwardImage,
}

/// The complete bookkeeping of the Hodge-class pushforward: one entry
/// per boundary divisor with codimension-one image, in the order
/// `E_0, E_2, E_3, E_{1,0}, E_{2,0}, E_{2,1}, …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PushforwardLedger {
    pub k: u64,
    pub entries: Vec<LedgerEntry>,
}

impl PushforwardLedger {
    pub fn entry(&self, label: DivisorLabel) -> Option<&LedgerEntry> {
        self.entries.iter().find(|e| e.label == label)
    }
}

/// Builds the pushforward ledger for `k ≥ 2`: profiles, weights, and
/// normalized pushforwards (`E_0 ↦ (N/2)δ_0`, `E_{j,c} ↦ deg·δ_j`,
/// `E_3 ↦ [D_3]/2`, `E_2 ↦ [D_2]/2` left symbolic).
pub fn pushforward_ledger(k: u64) -> Result<PushforwardLedger> {
    if k < 2 {
        return Err(Error::InvalidArgument("pushforward_ledger requires k >= 2".into()));
    }
    let mut entries = Vec::new();

    let e0 = BoundaryProfile::e0(k)?;
    entries.push(LedgerEntry {
        label: DivisorLabel::E0,
        multiplicity: e0.multiplicity(),
        kkz: kkz_coefficient(k, &e0)?,
        image: PushforwardImage::DeltaMultiple { j: 0, coeff: e0_degree_normalized(k)? },
        profile: Some(e0),
    });

    // For k = 2 the E_2 divisor is empty; its weight is kept as the
    // formal value of the closed form, with Σ 1/m_i = k − 2.
    let (e2_profile, e2_kkz) = if k >= 3 {
        let p = BoundaryProfile::e2(k)?;
        let w = kkz_coefficient(k, &p)?;
        (Some(p), w)
    } else {
        (None, kkz_coefficient_raw(k, 6 * k - 2, 2, &rat_int(k as i64 - 2)))
    };
    entries.push(LedgerEntry {
        label: DivisorLabel::E2,
        profile: e2_profile,
        multiplicity: 2,
        kkz: e2_kkz,
        image: PushforwardImage::HalfD2Unknown,
    });

    let e3 = BoundaryProfile::e3(k)?;
    entries.push(LedgerEntry {
        label: DivisorLabel::E3,
        multiplicity: e3.multiplicity(),
        kkz: kkz_coefficient(k, &e3)?,
        image: PushforwardImage::HalfD3(d3_class(k)?.scale(&rat(1, 2))),
        profile: Some(e3),
    });

    for j in 1..=k {
        for c in 0..=(j / 2) {
            let p = BoundaryProfile::ejc(k, j, c)?;
            entries.push(LedgerEntry {
                label: DivisorLabel::Ejc { j, c },
                multiplicity: p.multiplicity(),
                kkz: kkz_coefficient(k, &p)?,
                image: PushforwardImage::DeltaMultiple {
                    j,
                    coeff: restricted_degree_normalized(k, j, c)?,
                },
                profile: Some(p),
            });
        }
    }

    Ok(PushforwardLedger { k, entries })
}

/// The class of `D_2` assembled through the pushforward pipeline:
///
/// `[D_2]/2 = −2(6k−1)N·λ + ((3k−5)/6)[D_3] + ((3k−1)/2)N·δ_0
///          + Σ_j [ (6k−3j)(3j)/4 · A_3(j) + ((6k−1)/6)(A_2(j) − A_4(j)) ] δ_j`,
///
/// then doubled. Must equal [`d2_class_theorem`] for every `k ≥ 2`.
pub fn d2_class_pipeline(k: u64) -> Result<DivisorClass> {
    if k < 2 {
        return Err(Error::InvalidArgument("d2_class_pipeline requires k >= 2".into()));
    }
    let k_i = k as i64;
    let n = Rational::from_integer(catalan_n(k)?);
    let d3_share = d3_class(k)?.scale(&rat(3 * k_i - 5, 6));

    let c_lambda = rat_int(-2 * (6 * k_i - 1)) * &n + d3_share.c_lambda();
    let mut c_delta = vec![rat(3 * k_i - 1, 2) * &n + &d3_share.deltas()[0]];
    for j in 1..=k {
        let j_i = j as i64;
        let moment_part = rat((6 * k_i - 3 * j_i) * 3 * j_i, 4) * moment_a(k, j, 3)?
            + rat(6 * k_i - 1, 6) * (moment_a(k, j, 2)? - moment_a(k, j, 4)?);
        c_delta.push(moment_part + &d3_share.deltas()[j as usize]);
    }
    Ok(DivisorClass::new(k, c_lambda, c_delta)?.scale(&rat_int(2)))
}

/// The linear form `c_λ + 12c_0 − c_1`, which vanishes on the
/// kernel relation every Hurwitz-divisor class of this family satisfies.
pub fn harris_relation(cls: &DivisorClass) -> Rational {
    cls.c_lambda.clone() + rat_int(12) * &cls.c_delta[0] - &cls.c_delta[1]
}

/// Pairing with the one-nodal test family glued from a genus-`(2k−1)`
/// curve: `B·λ = 0`, `B·δ_0 = 2 − 2g`, `B·δ_1 = 1`, all other pairings
/// vanish, so the value is `(2 − 2g)c_0 + c_1` with `g = 2k`.
pub fn test_curve_pairing(cls: &DivisorClass) -> Rational {
    let g = 2 * cls.k as i64;
    rat_int(2 - 2 * g) * &cls.c_delta[0] + &cls.c_delta[1]
}

/// Scalar `r` with `cls = r·reference`, if one exists.
pub fn proportional_to(cls: &DivisorClass, reference: &DivisorClass) -> Result<Option<Rational>> {
    if cls.k != reference.k {
        return Err(Error::InvalidArgument(format!(
            "cannot compare classes with k={} and k={}",
            cls.k, reference.k
        )));
    }
    let pairs = || {
        std::iter::once((&cls.c_lambda, &reference.c_lambda))
            .chain(cls.c_delta.iter().zip(&reference.c_delta))
    };
    let ratio = match pairs().find(|(_, r)| !r.is_zero()) {
        Some((c, r)) => c / r,
        // Zero reference: only the zero class is a multiple of it.
        None => {
            return Ok(cls.is_zero().then(Rational::one));
        }
    };
    for (c, r) in pairs() {
        if *c != &ratio * r {
            return Ok(None);
        }
    }
    Ok(Some(ratio))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcomb::rat_int;

    fn class(k: u64, lambda: i64, deltas: &[i64]) -> DivisorClass {
        DivisorClass::new(
            k,
            rat_int(lambda),
            deltas.iter().map(|&d| rat_int(d)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn d3_small_values() {
        let d3 = d3_class(2).unwrap();
        assert_eq!(d3, class(2, 264, &[-30, -96, -128]));
        let d3 = d3_class(3).unwrap();
        assert_eq!(d3.c_lambda(), &rat_int(714));
        assert_eq!(d3.c_delta(0), Some(&rat_int(-87)));
        assert!(d3_class(1).is_err());
    }

    #[test]
    fn d2_theorem_small_values() {
        assert_eq!(d2_class_theorem(1).unwrap(), class(1, -120, &[12, 24]));
        assert!(d2_class_theorem(2).unwrap().is_zero());
        assert_eq!(
            d2_class_theorem(3).unwrap(),
            class(3, 612, &[-76, -300, -444, -459])
        );
        assert!(d2_class_theorem(0).is_err());
    }

    #[test]
    fn pipeline_matches_theorem() {
        for k in 2..=12u64 {
            assert_eq!(d2_class_pipeline(k).unwrap(), d2_class_theorem(k).unwrap(), "k={k}");
        }
        assert!(d2_class_pipeline(1).is_err());
    }

    #[test]
    fn pipeline_half_coefficients_at_k3() {
        // Half-class coefficients: lambda 306 = -2*17*5 + (4/6)*714,
        // delta_0 -38 = (4/6)(-87) + 4*5.
        let half = d2_class_pipeline(3).unwrap().scale(&rat(1, 2));
        assert_eq!(half.c_lambda(), &rat_int(306));
        assert_eq!(half.c_delta(0), Some(&rat_int(-38)));
    }

    #[test]
    fn kkz_standard_profiles() {
        for k in 2..=12u64 {
            let k_i = k as i64;
            let e0 = kkz_coefficient(k, &BoundaryProfile::e0(k).unwrap()).unwrap();
            assert_eq!(e0, rat(3 * k_i - 1, 2 * (6 * k_i - 1)), "E0 at k={k}");
            let e3 = kkz_coefficient(k, &BoundaryProfile::e3(k).unwrap()).unwrap();
            assert_eq!(e3, rat(3 * k_i - 5, 6 * (6 * k_i - 1)), "E3 at k={k}");
            if k >= 3 {
                let e2 = kkz_coefficient(k, &BoundaryProfile::e2(k).unwrap()).unwrap();
                assert_eq!(e2, rat(-1, 2 * (6 * k_i - 1)), "E2 at k={k}");
            }
        }
        // The raw form extends the E_2 weight to k = 2.
        assert_eq!(kkz_coefficient_raw(2, 10, 2, &rat_int(0)), rat(-1, 22));
    }

    #[test]
    fn kkz_rejects_bad_profiles() {
        let p = BoundaryProfile::new(4, vec![2, 2]).unwrap();
        assert!(kkz_coefficient(2, &p).is_err()); // parts sum to 4, need k+1 = 3
        let p = BoundaryProfile::new(40, vec![3, 1]).unwrap();
        assert!(kkz_coefficient(3, &p).is_err()); // b2 > 6k
        assert!(BoundaryProfile::new(4, vec![2, 0]).is_err());
    }

    #[test]
    fn ledger_shape_at_k3() {
        let ledger = pushforward_ledger(3).unwrap();
        assert_eq!(ledger.entries.len(), 8);
        let e10 = ledger.entry(DivisorLabel::Ejc { j: 1, c: 0 }).unwrap();
        assert_eq!(e10.multiplicity, 2);
        assert_eq!(
            e10.image,
            PushforwardImage::DeltaMultiple { j: 1, coeff: rat_int(5) }
        );
        let e0 = ledger.entry(DivisorLabel::E0).unwrap();
        assert_eq!(
            e0.image,
            PushforwardImage::DeltaMultiple { j: 0, coeff: rat(5, 2) }
        );
        assert!(pushforward_ledger(1).is_err());
    }

    #[test]
    fn ledger_k2_has_formal_e2_entry() {
        let ledger = pushforward_ledger(2).unwrap();
        let e2 = ledger.entry(DivisorLabel::E2).unwrap();
        assert!(e2.profile.is_none());
        assert_eq!(e2.kkz, rat(-1, 22));
    }

    /// Re-derives [D_2] by solving the pushforward identity
    /// `N·λ = Σ_E kkz(E) · pf(E)` straight off the ledger, an
    /// assembly route independent of `d2_class_pipeline`.
    fn d2_from_ledger(k: u64) -> DivisorClass {
        let ledger = pushforward_ledger(k).unwrap();
        let n = Rational::from_integer(catalan_n(k).unwrap());
        let mut residual = DivisorClass::new(
            k,
            n,
            vec![Rational::zero(); (k + 1) as usize],
        )
        .unwrap();
        let mut e2_weight = None;
        for entry in &ledger.entries {
            match &entry.image {
                PushforwardImage::DeltaMultiple { j, coeff } => {
                    let mut deltas = vec![Rational::zero(); (k + 1) as usize];
                    deltas[*j as usize] = -(&entry.kkz * coeff);
                    let term = DivisorClass::new(k, Rational::zero(), deltas).unwrap();
                    residual = residual.add(&term).unwrap();
                }
                PushforwardImage::HalfD3(half) => {
                    residual = residual.add(&half.scale(&-entry.kkz.clone())).unwrap();
                }
                PushforwardImage::HalfD2Unknown => e2_weight = Some(entry.kkz.clone()),
            }
        }
        let w = e2_weight.expect("ledger has an E2 entry");
        residual.scale(&(rat_int(2) / w))
    }

    #[test]
    fn ledger_solve_matches_pipeline() {
        for k in 2..=10u64 {
            assert_eq!(d2_from_ledger(k), d2_class_pipeline(k).unwrap(), "k={k}");
        }
    }

    #[test]
    fn harris_relation_vanishes() {
        assert_eq!(harris_relation(&d2_class_theorem(1).unwrap()), rat_int(0));
        assert_eq!(harris_relation(&d2_class_theorem(3).unwrap()), rat_int(0));
        assert_eq!(harris_relation(&DivisorClass::zero(4).unwrap()), rat_int(0));
    }

    #[test]
    fn test_curve_values() {
        let at3 = test_curve_pairing(&d2_class_theorem(3).unwrap());
        assert_eq!(at3, rat_int(460));
        // (k-1)(k-2)(12k+10)N at k = 3.
        assert_eq!(at3, rat_int(2 * 46 * 5));
        assert_eq!(test_curve_pairing(&d2_class_theorem(1).unwrap()), rat_int(0));
    }

    #[test]
    fn proportionality() {
        let ref_class = class(1, 10, &[-1, -2]);
        let ratio = proportional_to(&d2_class_theorem(1).unwrap(), &ref_class).unwrap();
        assert_eq!(ratio, Some(rat_int(-12)));

        let zero = DivisorClass::zero(1).unwrap();
        assert_eq!(proportional_to(&zero, &ref_class).unwrap(), Some(rat_int(0)));
        assert_eq!(proportional_to(&ref_class, &zero).unwrap(), None);
        assert_eq!(proportional_to(&zero, &zero).unwrap(), Some(rat_int(1)));

        let a = class(1, 1, &[2, 0]);
        let b = class(1, 1, &[3, 0]);
        assert_eq!(proportional_to(&a, &b).unwrap(), None);
        assert!(proportional_to(&a, &DivisorClass::zero(2).unwrap()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let cls = d2_class_theorem(3).unwrap();
        let json = cls.to_json_string();
        assert_eq!(DivisorClass::from_json_str(&json).unwrap(), cls);
        assert_eq!(
            json,
            r#"{"genus":6,"lambda":"612","delta":["-76","-300","-444","-459"]}"#
        );
        let half = cls.scale(&rat(1, 2));
        let json = half.to_json_string();
        assert_eq!(DivisorClass::from_json_str(&json).unwrap(), half);
        assert!(DivisorClass::from_json_str(r#"{"genus":3,"lambda":"1","delta":[]}"#).is_err());
    }
}
