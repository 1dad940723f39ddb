//! Braid and pure-braid actions on transposition tuples, and the orbit
//! computations certifying transitivity.
//!
//! The generator `Γ_i` of the braid group on `b` strands acts on a tuple
//! `[t_1, …, t_b]` by
//!
//! `[…, t_i, t_{i+1}, …] ↦ […, t_{i+1}, t_{i+1} t_i t_{i+1}, …]`,
//!
//! which preserves the product. The pure braid group is generated by the
//! standard words `A_{rs} = Γ_{s−1} ⋯ Γ_{r+1} Γ_r² Γ_{r+1}⁻¹ ⋯ Γ_{s−1}⁻¹`
//! for `1 ≤ r < s ≤ b`. [`orbits`] partitions a full tuple set under
//! either generator family and reports the partition in a canonical,
//! thread-count-independent form; [`certify_pure_braid_transitivity`]
//! additionally checks that the canonical base tuple `σ_0` sits in the
//! unique orbit.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::symcover::{
    centralizer, conjugate_tuple, enumerate_xi, sigma0_for_cycle_type, CycleType, HurwitzTuple,
    Permutation,
};
use crate::{Error, ResourceGuard, Result};

/// A word in the braid generators: letter `+i` is `Γ_i`, `-i` is `Γ_i⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Validates that every letter references a generator `Γ_1 … Γ_{b−1}`.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::InvalidArgument(format!(
                    "letter {l} is not a generator index for {strands} strands"
                )));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// The inverse word: letters reversed and negated.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// Image in the symmetric group on strands (`Γ_i ↦ (i, i+1)`).
    pub fn strand_permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            let swap = Permutation::transposition(self.strands, i, i + 1)
                .expect("letter validated at construction");
            p = swap.compose(&p).expect("same strand count");
        }
        p
    }
}

fn check_index(i: usize, b: usize) -> Result<()> {
    if i < 1 || i >= b {
        return Err(Error::InvalidArgument(format!(
            "generator index {i} out of range 1..={} for b = {b}",
            b.saturating_sub(1)
        )));
    }
    Ok(())
}

/// Applies `Γ_i` (1-based): entries `i, i+1` become
/// `(t_{i+1}, t_{i+1} t_i t_{i+1})`. The product is unchanged.
pub fn act_generator(i: usize, t: &HurwitzTuple) -> Result<HurwitzTuple> {
    check_index(i, t.len())?;
    let e = t.entries();
    let (a, b) = (e[i - 1], e[i]);
    Ok(t.with_pair_replaced(i - 1, b, a.conjugate_by(&b)))
}

/// Applies `Γ_i⁻¹`: entries `i, i+1` become `(t_i t_{i+1} t_i, t_i)`.
pub fn act_inverse_generator(i: usize, t: &HurwitzTuple) -> Result<HurwitzTuple> {
    check_index(i, t.len())?;
    let e = t.entries();
    let (a, b) = (e[i - 1], e[i]);
    Ok(t.with_pair_replaced(i - 1, b.conjugate_by(&a), a))
}

/// Applies one signed letter.
pub fn act_letter(letter: i32, t: &HurwitzTuple) -> Result<HurwitzTuple> {
    if letter >= 0 {
        act_generator(letter as usize, t)
    } else {
        act_inverse_generator((-letter) as usize, t)
    }
}

/// Applies a word letter by letter, first letter first.
pub fn act_word(word: &BraidWord, t: &HurwitzTuple) -> Result<HurwitzTuple> {
    if word.strands != t.len() {
        return Err(Error::InvalidArgument(format!(
            "word on {} strands cannot act on a tuple of length {}",
            word.strands,
            t.len()
        )));
    }
    let mut cur = t.clone();
    for &l in &word.letters {
        cur = act_letter(l, &cur)?;
    }
    Ok(cur)
}

/// The standard pure-braid generating words
/// `A_{rs} = Γ_{s−1} ⋯ Γ_{r+1} Γ_r² Γ_{r+1}⁻¹ ⋯ Γ_{s−1}⁻¹`,
/// one for each pair `1 ≤ r < s ≤ b`; empty for `b < 2`.
pub fn pure_braid_generators(b: usize) -> Vec<BraidWord> {
    let mut words = Vec::new();
    if b < 2 {
        return words;
    }
    for r in 1..b {
        for s in (r + 1)..=b {
            let mut letters = Vec::new();
            for i in ((r + 1)..s).rev() {
                letters.push(i as i32);
            }
            letters.push(r as i32);
            letters.push(r as i32);
            for i in (r + 1)..s {
                letters.push(-(i as i32));
            }
            words.push(BraidWord { strands: b, letters });
        }
    }
    words
}

/// Whether `Γ_i³` fixes the pair at positions `i, i+1`; true whenever
/// the two supports share a letter, false for disjoint distinct entries.
pub fn gamma_cubed_fixes_overlapping(t: &HurwitzTuple, i: usize) -> Result<bool> {
    check_index(i, t.len())?;
    let mut cur = t.clone();
    for _ in 0..3 {
        cur = act_generator(i, &cur)?;
    }
    Ok(cur == *t)
}

/// Which family of moves an orbit computation closes under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GeneratorSet {
    #[serde(rename = "full-braid")]
    FullBraid,
    #[serde(rename = "pure-braid")]
    PureBraid,
}

impl std::fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GeneratorSet::FullBraid => write!(f, "full-braid"),
            GeneratorSet::PureBraid => write!(f, "pure-braid"),
        }
    }
}

/// Options for an orbit run. `quotient` additionally identifies tuples
/// conjugate under the centralizer of `φ`, giving cover-level orbits;
/// `threads > 1` parallelizes the move applications. The report is
/// bit-identical regardless of `threads`.
#[derive(Debug, Clone, Copy)]
pub struct OrbitOptions {
    pub quotient: bool,
    pub threads: usize,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions { quotient: false, threads: 1 }
    }
}

/// Canonical description of an orbit partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub d: usize,
    pub b: usize,
    /// Cycle notation of the fixed product permutation.
    pub phi: String,
    /// Its cycle type, as a comma list.
    pub phi_type: String,
    pub generators: GeneratorSet,
    /// Whether centralizer conjugations were added to the moves.
    pub quotient: bool,
    pub total_tuples: u64,
    pub orbit_count: u64,
    /// Orbit sizes, largest first.
    pub orbit_sizes: Vec<u64>,
    /// One orbit covering a nonempty tuple set.
    pub transitive: bool,
    /// Whether the canonical tuple lies in the unique orbit; `null` when
    /// no canonical tuple is attached to the run.
    pub sigma0_in_unique_orbit: Option<bool>,
    pub nodes_visited: u64,
    pub edges_applied: u64,
}

impl OrbitReport {
    /// Stable JSON rendering; byte-identical for identical runs.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("orbit report serializes")
    }

    pub fn from_json_str(s: &str) -> Result<OrbitReport> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("orbit report JSON: {e}")))
    }
}

/// Partitions the full tuple set for `(d, b, φ)` under the chosen
/// generator family (with inverses) and reports the partition.
pub fn orbits(
    d: usize,
    b: usize,
    phi: &Permutation,
    generators: GeneratorSet,
    guard: &ResourceGuard,
) -> Result<OrbitReport> {
    orbits_with(d, b, phi, generators, OrbitOptions::default(), None, guard)
}

/// As [`orbits`], with explicit options and an optional canonical tuple
/// whose membership in the unique orbit is reported.
pub fn orbits_with(
    d: usize,
    b: usize,
    phi: &Permutation,
    generators: GeneratorSet,
    options: OrbitOptions,
    sigma0: Option<&HurwitzTuple>,
    guard: &ResourceGuard,
) -> Result<OrbitReport> {
    let tuples = enumerate_xi(d, b, phi, guard)?;
    let n = tuples.len();
    if n as u64 > guard.state_ceiling {
        return Err(Error::ResourceExceeded(format!(
            "orbit traversal would store {n} states, over the ceiling {} \
             (raise HDL_NODE_CEILING to override)",
            guard.state_ceiling
        )));
    }

    let moves = collect_moves(b, generators, options.quotient, phi, guard)?;
    let index: HashMap<&HurwitzTuple, usize> =
        tuples.iter().enumerate().map(|(i, t)| (t, i)).collect();

    let apply_all = |tuple: &HurwitzTuple| -> Vec<usize> {
        moves
            .iter()
            .map(|mv| {
                let image = mv.apply(tuple);
                debug_assert_eq!(image.product(), tuple.product(), "moves preserve the product");
                *index
                    .get(&image)
                    .expect("moves map the tuple set to itself")
            })
            .collect()
    };

    // Images are computed per state (optionally in parallel) and merged
    // in state order, so the partition and every reported number are
    // independent of the thread count.
    let targets: Vec<Vec<usize>> = if options.threads > 1 {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.threads)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
        pool.install(|| tuples.par_iter().map(apply_all).collect())
    } else {
        tuples.iter().map(apply_all).collect()
    };

    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut orbit_count_raw = n;
    for (i, images) in targets.iter().enumerate() {
        for &j in images {
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri] = rj;
                orbit_count_raw -= 1;
            }
        }
    }

    let mut size_by_root: HashMap<usize, u64> = HashMap::new();
    for i in 0..n {
        *size_by_root.entry(find(&mut parent, i)).or_insert(0) += 1;
    }
    let mut orbit_sizes: Vec<u64> = size_by_root.values().copied().collect();
    orbit_sizes.sort_unstable_by(|a, b| b.cmp(a));
    let orbit_count = orbit_sizes.len() as u64;
    debug_assert_eq!(orbit_count as usize, if n == 0 { 0 } else { orbit_count_raw });
    let transitive = n > 0 && orbit_count == 1;

    let sigma0_in_unique_orbit = sigma0.map(|s| transitive && index.contains_key(s));

    let edges_applied = (n as u64) * (moves.len() as u64);
    Ok(OrbitReport {
        d,
        b,
        phi: phi.to_cycle_string(),
        phi_type: phi.cycle_type().to_string(),
        generators,
        quotient: options.quotient,
        total_tuples: n as u64,
        orbit_count,
        orbit_sizes,
        transitive,
        sigma0_in_unique_orbit,
        nodes_visited: n as u64,
        edges_applied,
    })
}

enum OrbitMove {
    Letter(i32),
    Word(BraidWord),
    Conjugate(Permutation),
}

impl OrbitMove {
    fn apply(&self, t: &HurwitzTuple) -> HurwitzTuple {
        match self {
            OrbitMove::Letter(l) => act_letter(*l, t).expect("validated letter"),
            OrbitMove::Word(w) => act_word(w, t).expect("validated word"),
            OrbitMove::Conjugate(g) => conjugate_tuple(t, g),
        }
    }
}

fn collect_moves(
    b: usize,
    generators: GeneratorSet,
    quotient: bool,
    phi: &Permutation,
    guard: &ResourceGuard,
) -> Result<Vec<OrbitMove>> {
    let mut moves = Vec::new();
    match generators {
        GeneratorSet::FullBraid => {
            for i in 1..b {
                moves.push(OrbitMove::Letter(i as i32));
                moves.push(OrbitMove::Letter(-(i as i32)));
            }
        }
        GeneratorSet::PureBraid => {
            for w in pure_braid_generators(b) {
                moves.push(OrbitMove::Word(w.inverse()));
                moves.push(OrbitMove::Word(w));
            }
        }
    }
    if quotient {
        for g in centralizer(phi, guard)? {
            if !g.is_identity() {
                moves.push(OrbitMove::Conjugate(g));
            }
        }
    }
    Ok(moves)
}

/// Runs the pure-braid orbit computation for the canonical
/// representative of `mu` and flags whether the canonical tuple `σ_0`
/// (when one of the printed patterns applies to `mu`) lies in the unique
/// orbit.
pub fn certify_pure_braid_transitivity(
    d: usize,
    b: usize,
    mu: &CycleType,
    guard: &ResourceGuard,
) -> Result<OrbitReport> {
    certify_pure_braid_transitivity_with(d, b, mu, OrbitOptions::default(), guard)
}

/// As [`certify_pure_braid_transitivity`], with explicit options.
pub fn certify_pure_braid_transitivity_with(
    d: usize,
    b: usize,
    mu: &CycleType,
    options: OrbitOptions,
    guard: &ResourceGuard,
) -> Result<OrbitReport> {
    let phi = mu.canonical_rep();
    // No canonical tuple exists when the printed patterns do not cover
    // this type, or when they degenerate at these (d, b); the orbit
    // partition is still reported.
    let sigma0 = match sigma0_for_cycle_type(mu, d, b) {
        Ok(s) => s,
        Err(Error::Construction(_)) => None,
        Err(err) => return Err(err),
    };
    orbits_with(
        d,
        b,
        &phi,
        GeneratorSet::PureBraid,
        options,
        sigma0.as_ref(),
        guard,
    )
}
