//! Permutation arithmetic and the combinatorial model of branched
//! covers: tuples of transpositions with prescribed product.
//!
//! A degree-`d` cover of the line with `b` simple branch points and one
//! further point of monodromy `φ` corresponds to a tuple
//! `[t_1, …, t_b]` of transpositions generating the symmetric group
//! with `t_1 · t_2 ⋯ t_b = φ`; covers themselves are orbits of such
//! tuples under simultaneous conjugation by the centralizer of `φ`.
//! This module enumerates those tuples exhaustively (with a resource
//! guard), counts covers, and constructs the canonical base tuples
//! `σ_0` that the transitivity certificates in [`crate::braid`] anchor
//! to.
//!
//! Composition convention, fixed once for the whole crate:
//! `(p · q)(x) = p(q(x))`, i.e. the rightmost factor acts first. A tuple
//! product `t_1 · t_2 ⋯ t_b` therefore applies `t_b` first. Under this
//! convention `(1 3) · (1 2) = (1 2 3)`, which is what makes the printed
//! canonical tuples multiply out to their stated monodromy.

use std::collections::HashMap;
use std::fmt;

use crate::{Error, ResourceGuard, Result};

/// A bijection of `{1, …, d}`, stored as a 0-based image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Identity on `{1, …, d}`.
    pub fn identity(d: usize) -> Self {
        Permutation { images: (0..d).collect() }
    }

    /// Builds a permutation from a 0-based image table.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &y in &images {
            if y >= d || seen[y] {
                return Err(Error::InvalidArgument("image table is not a bijection".into()));
            }
            seen[y] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition `(a b)` in the symmetric group on `d` letters
    /// (`a`, `b` are 1-based).
    pub fn transposition(d: usize, a: usize, b: usize) -> Result<Self> {
        let t = Transposition::new(a, b)?;
        if t.high() > d {
            return Err(Error::InvalidArgument(format!(
                "transposition ({a} {b}) does not fit in degree {d}"
            )));
        }
        let mut images: Vec<usize> = (0..d).collect();
        images.swap(a - 1, b - 1);
        Ok(Permutation { images })
    }

    /// Parses disjoint cycle notation such as `"(1 2 3)(4 5)"` into a
    /// permutation of `{1, …, d}`. Entries may be separated by spaces or
    /// commas; `"()"` denotes the identity.
    pub fn parse_cycles(d: usize, input: &str) -> Result<Self> {
        let mut images: Vec<usize> = (0..d).collect();
        let mut used = vec![false; d];
        let s = input.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty cycle expression".into()));
        }
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {input:?}")))?;
            if !rest[..open].trim().is_empty() {
                return Err(Error::Parse(format!("stray text in {input:?}")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced '(' in {input:?}")))?;
            let body = &rest[open + 1..close];
            rest = &rest[close + 1..];
            let mut cycle = Vec::new();
            for tok in body.split(|ch: char| ch.is_whitespace() || ch == ',') {
                if tok.is_empty() {
                    continue;
                }
                let x: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad entry {tok:?} in {input:?}")))?;
                if x < 1 || x > d {
                    return Err(Error::Parse(format!(
                        "entry {x} out of range 1..={d} in {input:?}"
                    )));
                }
                if used[x - 1] {
                    return Err(Error::Parse(format!("entry {x} repeated in {input:?}")));
                }
                used[x - 1] = true;
                cycle.push(x - 1);
            }
            for (i, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Number of letters acted on.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// Composition `(self · other)(x) = self(other(x))`; degrees must match.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::InvalidArgument(format!(
                "cannot compose permutations of degrees {} and {}",
                self.degree(),
                other.degree()
            )));
        }
        let images = other.images.iter().map(|&y| self.images[y]).collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Sign of the permutation: `+1` or `-1`.
    pub fn sign(&self) -> i8 {
        if (self.degree() - self.cycle_count()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.images.len()];
        let mut count = 0;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
            }
        }
        count
    }

    /// Multiset of cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> CycleType {
        let mut parts = Vec::new();
        let mut seen = vec![false; self.images.len()];
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            parts.push(len);
        }
        CycleType::new(parts).expect("cycle lengths form a partition")
    }

    /// Nontrivial cycles, each starting at its smallest letter, ordered
    /// by that letter (1-based).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut seen = vec![false; self.images.len()];
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Disjoint cycle notation, `"()"` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let body = c.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
                format!("({body})")
            })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.to_cycle_string())
    }
}

/// A partition of `d`: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(Vec<usize>);

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidArgument(
                "cycle type needs at least one positive part".into(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Sum of the parts.
    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// The canonical representative: cycles on consecutive integers, in
    /// decreasing part order, e.g. `(3,1) ↦ (1 2 3)` in degree 4.
    pub fn canonical_rep(&self) -> Permutation {
        let d = self.degree();
        let mut images: Vec<usize> = (0..d).collect();
        let mut start = 0;
        for &len in &self.0 {
            for i in 0..len {
                images[start + i] = start + (i + 1) % len;
            }
            start += len;
        }
        Permutation { images }
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self.0.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{body}")
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType({self})")
    }
}

impl std::str::FromStr for CycleType {
    type Err = Error;

    /// Parses a comma list such as `"3,1,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition entry {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        CycleType::new(parts)
    }
}

/// A transposition `(a b)` with `a < b`, 1-based.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    a: usize,
    b: usize,
}

impl Transposition {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a == b {
            return Err(Error::InvalidArgument(format!(
                "({a} {b}) is not a transposition"
            )));
        }
        Ok(Transposition { a: a.min(b), b: a.max(b) })
    }

    pub fn low(&self) -> usize {
        self.a
    }

    pub fn high(&self) -> usize {
        self.b
    }

    pub fn apply(&self, x: usize) -> usize {
        if x == self.a {
            self.b
        } else if x == self.b {
            self.a
        } else {
            x
        }
    }

    /// The conjugate `g · self · g⁻¹`, i.e. the transposition on the
    /// images of the support under `g`.
    pub fn conjugate_by(&self, g: &Transposition) -> Transposition {
        Transposition::new(g.apply(self.a), g.apply(self.b)).expect("conjugate of a transposition")
    }

    /// Whether the supports share a letter.
    pub fn overlaps(&self, other: &Transposition) -> bool {
        self.a == other.a || self.a == other.b || self.b == other.a || self.b == other.b
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.a, self.b)
    }
}

impl fmt::Debug for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.a, self.b)
    }
}

/// An ordered tuple of transpositions in degree `d`, with its product
/// (rightmost entry applied first) cached.
#[derive(Clone)]
pub struct HurwitzTuple {
    d: usize,
    entries: Vec<Transposition>,
    product: Permutation,
}

impl HurwitzTuple {
    pub fn new(d: usize, entries: Vec<Transposition>) -> Result<Self> {
        if let Some(t) = entries.iter().find(|t| t.high() > d) {
            return Err(Error::InvalidArgument(format!(
                "entry {t} does not fit in degree {d}"
            )));
        }
        let product = product_of(d, &entries);
        Ok(HurwitzTuple { d, entries, product })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Tuple length `b`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Transposition] {
        &self.entries
    }

    /// The cached product `t_1 · t_2 ⋯ t_b`.
    pub fn product(&self) -> &Permutation {
        &self.product
    }

    /// Whether the entries generate the full symmetric group; since they
    /// are transpositions this is connectivity of the support graph on
    /// all `d` letters.
    pub fn is_generating(&self) -> bool {
        let mut dsu = Dsu::new(self.d);
        for t in &self.entries {
            dsu.union(t.low() - 1, t.high() - 1);
        }
        dsu.components() == 1
    }

    /// Replaces the (0-based) entries at `i`, `i+1`, keeping the cached
    /// product, which the braid moves preserve.
    pub(crate) fn with_pair_replaced(
        &self,
        i: usize,
        first: Transposition,
        second: Transposition,
    ) -> HurwitzTuple {
        let mut entries = self.entries.clone();
        entries[i] = first;
        entries[i + 1] = second;
        HurwitzTuple { d: self.d, entries, product: self.product.clone() }
    }
}

impl PartialEq for HurwitzTuple {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d && self.entries == other.entries
    }
}

impl Eq for HurwitzTuple {}

impl std::hash::Hash for HurwitzTuple {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.d.hash(state);
        self.entries.hash(state);
    }
}

impl PartialOrd for HurwitzTuple {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HurwitzTuple {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.d, &self.entries).cmp(&(other.d, &other.entries))
    }
}

impl fmt::Debug for HurwitzTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, t) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "]")
    }
}

fn product_of(d: usize, entries: &[Transposition]) -> Permutation {
    let mut images: Vec<usize> = (0..d).collect();
    for t in entries.iter().rev() {
        for y in images.iter_mut() {
            *y = t.apply(*y + 1) - 1;
        }
    }
    Permutation { images }
}

/// Minimal union-find on `0..n`.
struct Dsu {
    parent: Vec<usize>,
    components: usize,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), components: n }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.parent[rx] = ry;
        self.components -= 1;
        true
    }

    fn components(&self) -> usize {
        self.components
    }
}

/// All transpositions of `{1, …, d}` in lexicographic order.
pub fn all_transpositions(d: usize) -> Vec<Transposition> {
    let mut out = Vec::with_capacity(d * d.saturating_sub(1) / 2);
    for a in 1..=d {
        for b in (a + 1)..=d {
            out.push(Transposition { a, b });
        }
    }
    out
}

/// Exhaustively enumerates all `b`-tuples of transpositions of
/// `{1, …, d}` that generate the symmetric group and multiply to `phi`.
///
/// Returns the tuples in lexicographic order. A sign mismatch between
/// `phi` and `(−1)^b` yields an empty set (no error). The search is
/// depth-first with prefix-product and connectivity pruning and counts
/// visited nodes against `guard.node_ceiling`.
pub fn enumerate_xi(
    d: usize,
    b: usize,
    phi: &Permutation,
    guard: &ResourceGuard,
) -> Result<Vec<HurwitzTuple>> {
    if phi.degree() != d {
        return Err(Error::InvalidArgument(format!(
            "phi has degree {}, expected {d}",
            phi.degree()
        )));
    }
    if b == 0 {
        return Err(Error::InvalidArgument("enumerate_xi requires b >= 1".into()));
    }
    if d < 2 {
        return Ok(Vec::new());
    }
    let parity_of_b = if b.is_multiple_of(2) { 1 } else { -1 };
    if phi.sign() != parity_of_b {
        return Ok(Vec::new());
    }

    let trans = all_transpositions(d);
    let mut search = XiSearch {
        d,
        b,
        phi_images: phi.images.clone(),
        trans,
        prefix: (0..d).collect(),
        entries: Vec::with_capacity(b),
        out: Vec::new(),
        visited: 0,
        ceiling: guard.node_ceiling,
    };
    search.run(Dsu::new(d))?;
    Ok(search.out)
}

struct XiSearch {
    d: usize,
    b: usize,
    phi_images: Vec<usize>,
    trans: Vec<Transposition>,
    /// Image table of `t_1 ∘ … ∘ t_i` for the current prefix.
    prefix: Vec<usize>,
    entries: Vec<Transposition>,
    out: Vec<HurwitzTuple>,
    visited: u64,
    ceiling: u64,
}

impl XiSearch {
    fn run(&mut self, dsu: Dsu) -> Result<()> {
        self.visited += 1;
        if self.visited > self.ceiling {
            return Err(Error::ResourceExceeded(format!(
                "tuple enumeration for d={}, b={} exceeded {} visited nodes \
                 (raise HDL_NODE_CEILING to override)",
                self.d, self.b, self.ceiling
            )));
        }
        let chosen = self.entries.len();
        let remaining = self.b - chosen;

        // Residual permutation the suffix still has to produce:
        // R = prefix⁻¹ ∘ phi needs at least d − #cycles(R) transpositions.
        let mut prefix_inv = vec![0; self.d];
        for (x, &y) in self.prefix.iter().enumerate() {
            prefix_inv[y] = x;
        }
        let mut cycles = 0;
        let mut seen = vec![false; self.d];
        for start in 0..self.d {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = prefix_inv[self.phi_images[x]];
            }
        }
        if self.d - cycles > remaining {
            return Ok(());
        }
        if dsu.components() - 1 > remaining {
            return Ok(());
        }

        if remaining == 0 {
            if cycles == self.d && dsu.components() == 1 {
                let entries = self.entries.clone();
                let product = Permutation { images: self.prefix.clone() };
                debug_assert_eq!(product.images, self.phi_images);
                self.out.push(HurwitzTuple { d: self.d, entries, product });
            }
            return Ok(());
        }

        for idx in 0..self.trans.len() {
            let t = self.trans[idx];
            self.entries.push(t);
            // prefix ∘ (a b) swaps the images at positions a, b.
            self.prefix.swap(t.a - 1, t.b - 1);
            let mut next_dsu = Dsu {
                parent: dsu.parent.clone(),
                components: dsu.components,
            };
            next_dsu.union(t.a - 1, t.b - 1);
            self.run(next_dsu)?;
            self.prefix.swap(t.a - 1, t.b - 1);
            self.entries.pop();
        }
        Ok(())
    }
}

/// All permutations commuting with `phi`, in lexicographic order of
/// image tables. Enumerates the full symmetric group, so `d!` is checked
/// against the node ceiling first.
pub fn centralizer(phi: &Permutation, guard: &ResourceGuard) -> Result<Vec<Permutation>> {
    let d = phi.degree();
    let mut size = 1u128;
    for i in 1..=d as u128 {
        size = size.saturating_mul(i);
    }
    if size > guard.node_ceiling as u128 {
        return Err(Error::ResourceExceeded(format!(
            "centralizer enumeration needs {d}! permutations, over the ceiling {}",
            guard.node_ceiling
        )));
    }
    let mut out = Vec::new();
    let mut images: Vec<usize> = (0..d).collect();
    loop {
        let commutes = (0..d).all(|x| images[phi.images[x]] == phi.images[images[x]]);
        if commutes {
            out.push(Permutation { images: images.clone() });
        }
        if !next_permutation(&mut images) {
            break;
        }
    }
    Ok(out)
}

fn next_permutation(arr: &mut [usize]) -> bool {
    if arr.len() < 2 {
        return false;
    }
    let mut i = arr.len() - 1;
    while i > 0 && arr[i - 1] >= arr[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = arr.len() - 1;
    while arr[j] <= arr[i - 1] {
        j -= 1;
    }
    arr.swap(i - 1, j);
    arr[i..].reverse();
    true
}

/// Number of covers with `b` simple branch points and one extra point of
/// type `mu`: orbits of the centralizer of the canonical representative
/// of `mu` acting on the tuple set by simultaneous conjugation.
pub fn count_covers(d: usize, b: usize, mu: &CycleType, guard: &ResourceGuard) -> Result<u64> {
    if mu.degree() != d {
        return Err(Error::InvalidArgument(format!(
            "cycle type {mu} partitions {}, expected {d}",
            mu.degree()
        )));
    }
    count_covers_for(&mu.canonical_rep(), b, guard)
}

/// As [`count_covers`], for an explicitly chosen representative `phi`.
/// The count depends only on the cycle type of `phi`.
pub fn count_covers_for(phi: &Permutation, b: usize, guard: &ResourceGuard) -> Result<u64> {
    let d = phi.degree();
    let tuples = enumerate_xi(d, b, phi, guard)?;
    if tuples.is_empty() {
        return Ok(0);
    }
    let cent = centralizer(phi, guard)?;
    let index: HashMap<&HurwitzTuple, usize> =
        tuples.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut dsu = Dsu::new(tuples.len());
    for (i, tuple) in tuples.iter().enumerate() {
        for g in &cent {
            if g.is_identity() {
                continue;
            }
            let conj = conjugate_tuple(tuple, g);
            let j = *index
                .get(&conj)
                .expect("conjugation by the centralizer preserves the tuple set");
            dsu.union(i, j);
        }
    }
    Ok(dsu.components() as u64)
}

/// Simultaneous conjugation `g · t_i · g⁻¹` of every entry.
pub fn conjugate_tuple(tuple: &HurwitzTuple, g: &Permutation) -> HurwitzTuple {
    let entries = tuple
        .entries
        .iter()
        .map(|t| {
            Transposition::new(g.apply(t.low()), g.apply(t.high()))
                .expect("conjugate of a transposition")
        })
        .collect();
    HurwitzTuple::new(tuple.d, entries).expect("conjugate tuple is well-formed")
}

/// Branch data of a candidate cover: degree and one ramification profile
/// per branch point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchData {
    d: usize,
    profiles: Vec<CycleType>,
}

impl BranchData {
    /// Every profile must partition `d`.
    pub fn new(d: usize, profiles: Vec<CycleType>) -> Result<Self> {
        for p in &profiles {
            if p.degree() != d {
                return Err(Error::InvalidBranchData(format!(
                    "profile {p} partitions {}, expected {d}",
                    p.degree()
                )));
            }
        }
        Ok(BranchData { d, profiles })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn profiles(&self) -> &[CycleType] {
        &self.profiles
    }
}

/// Genus of the cover determined by the branch data:
/// `2g − 2 = −2d + Σ_profiles Σ_parts (part − 1)`.
/// Errors when the genus is not a nonnegative integer.
pub fn riemann_hurwitz_genus(data: &BranchData) -> Result<u64> {
    let ram: i64 = data
        .profiles
        .iter()
        .map(|p| p.parts().iter().map(|&m| m as i64 - 1).sum::<i64>())
        .sum();
    let doubled = ram - 2 * data.d as i64 + 2;
    if doubled < 0 || doubled % 2 != 0 {
        return Err(Error::InvalidBranchData(format!(
            "branch data gives 2g = {doubled}, not a nonnegative even integer"
        )));
    }
    Ok((doubled / 2) as u64)
}

/// Which canonical base tuple to construct.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sigma0Variant {
    /// Monodromy `(1 2 3)`: `[(1 3), (1 2), (1 4)², …, (1 d−1)², (1 d)^r]`.
    Triple,
    /// Monodromy `(1 2)(3 4)`:
    /// `[(1 2), (1 3), (1 3), (3 4), (1 4)², …, (1 d−1)², (1 d)^r]`.
    TwoTwo,
    /// Long-cycle tuple for the high-genus factor of `E_{j,c}`:
    /// degree `k+1−c`, length `6k−3j`, monodromy `(1 2 … j+1−2c)`.
    Factor1 { k: u64, j: u64, c: u64 },
    /// Long-cycle tuple for the low-genus factor of `E_{j,c}`:
    /// degree `j+1−c`, length `3j`, monodromy `(1 2 … j+1−2c)`.
    Factor2 { k: u64, j: u64, c: u64 },
}

/// Constructs the canonical tuple `σ_0` of the requested variant in
/// degree `d` and length `b`, verifying that its product is the
/// variant's monodromy and that it generates the symmetric group.
pub fn build_sigma0(variant: Sigma0Variant, d: usize, b: usize) -> Result<HurwitzTuple> {
    let (entries, phi) = match variant {
        Sigma0Variant::Triple => {
            if d < 3 {
                return Err(Error::Construction("the (1 2 3) tuple needs d >= 3".into()));
            }
            let mut entries = vec![Transposition { a: 1, b: 3 }, Transposition { a: 1, b: 2 }];
            for m in 4..d {
                entries.push(Transposition { a: 1, b: m });
                entries.push(Transposition { a: 1, b: m });
            }
            let tail = checked_tail(b, entries.len(), "(1 d)")?;
            entries.extend(std::iter::repeat_n(Transposition { a: 1, b: d }, tail));
            (entries, Permutation::parse_cycles(d, "(1 2 3)")?)
        }
        Sigma0Variant::TwoTwo => {
            if d < 4 {
                return Err(Error::Construction("the (1 2)(3 4) tuple needs d >= 4".into()));
            }
            let mut entries = vec![
                Transposition { a: 1, b: 2 },
                Transposition { a: 1, b: 3 },
                Transposition { a: 1, b: 3 },
                Transposition { a: 3, b: 4 },
            ];
            for m in 4..d {
                entries.push(Transposition { a: 1, b: m });
                entries.push(Transposition { a: 1, b: m });
            }
            let tail = checked_tail(b, entries.len(), "(1 d)")?;
            entries.extend(std::iter::repeat_n(Transposition { a: 1, b: d }, tail));
            (entries, Permutation::parse_cycles(d, "(1 2)(3 4)")?)
        }
        Sigma0Variant::Factor1 { k, j, c } => {
            check_factor_params(k, j, c)?;
            let (want_d, want_b) = ((k + 1 - c) as usize, (6 * k - 3 * j) as usize);
            if d != want_d || b != want_b {
                return Err(Error::Construction(format!(
                    "factor-1 tuple for (k,j,c)=({k},{j},{c}) lives in degree {want_d}, \
                     length {want_b}; got d={d}, b={b}"
                )));
            }
            return long_cycle_sigma0(d, b, (j + 1 - 2 * c) as usize);
        }
        Sigma0Variant::Factor2 { k, j, c } => {
            check_factor_params(k, j, c)?;
            let (want_d, want_b) = ((j + 1 - c) as usize, (3 * j) as usize);
            if d != want_d || b != want_b {
                return Err(Error::Construction(format!(
                    "factor-2 tuple for (k,j,c)=({k},{j},{c}) lives in degree {want_d}, \
                     length {want_b}; got d={d}, b={b}"
                )));
            }
            return long_cycle_sigma0(d, b, (j + 1 - 2 * c) as usize);
        }
    };
    finish_sigma0(d, entries, &phi)
}

/// The long-cycle pattern underlying both factor variants: a descending
/// chain `(1 ℓ), …, (1 2)` producing the cycle `(1 2 … ℓ)`, duplicated
/// pairs `(1 m)²` for `m = ℓ+1, …, d`, and a trailing even block of
/// `(1 2)`.
pub fn long_cycle_sigma0(d: usize, b: usize, len: usize) -> Result<HurwitzTuple> {
    if d < 2 || len < 1 || len > d {
        return Err(Error::Construction(format!(
            "long-cycle tuple needs 1 <= len <= d and d >= 2; got len={len}, d={d}"
        )));
    }
    let mut entries = Vec::with_capacity(b);
    for m in (2..=len).rev() {
        entries.push(Transposition { a: 1, b: m });
    }
    for m in (len + 1)..=d {
        entries.push(Transposition { a: 1, b: m });
        entries.push(Transposition { a: 1, b: m });
    }
    let tail = checked_tail(b, entries.len(), "(1 2)")?;
    entries.extend(std::iter::repeat_n(Transposition { a: 1, b: 2 }, tail));
    let mut phi_images: Vec<usize> = (0..d).collect();
    for (i, img) in phi_images.iter_mut().enumerate().take(len) {
        *img = (i + 1) % len;
    }
    finish_sigma0(d, entries, &Permutation { images: phi_images })
}

fn check_factor_params(k: u64, j: u64, c: u64) -> Result<()> {
    if j < 1 || j > k || c > j / 2 {
        return Err(Error::Construction(format!(
            "factor tuple needs 1 <= j <= k and 0 <= c <= j/2; got k={k}, j={j}, c={c}"
        )));
    }
    Ok(())
}

fn checked_tail(b: usize, used: usize, what: &str) -> Result<usize> {
    if b < used || !(b - used).is_multiple_of(2) {
        return Err(Error::Construction(format!(
            "trailing {what} block would repeat {} times, which is not a \
             nonnegative even count",
            b as i64 - used as i64
        )));
    }
    Ok(b - used)
}

fn finish_sigma0(d: usize, entries: Vec<Transposition>, phi: &Permutation) -> Result<HurwitzTuple> {
    let tuple = HurwitzTuple::new(d, entries)?;
    if tuple.product() != phi {
        return Err(Error::Construction(format!(
            "canonical tuple multiplies to {}, expected {}",
            tuple.product(),
            phi
        )));
    }
    if !tuple.is_generating() {
        return Err(Error::Construction(
            "canonical tuple does not generate the symmetric group".into(),
        ));
    }
    Ok(tuple)
}

/// The canonical tuple attached to a cycle type, when one of the printed
/// patterns applies: `(3)`-type and single long cycles (including the
/// identity type) have one, `(2,2)`-type has one, anything else has
/// none.
pub fn sigma0_for_cycle_type(mu: &CycleType, d: usize, b: usize) -> Result<Option<HurwitzTuple>> {
    if mu.degree() != d {
        return Err(Error::InvalidArgument(format!(
            "cycle type {mu} partitions {}, expected {d}",
            mu.degree()
        )));
    }
    let nontrivial: Vec<usize> = mu.parts().iter().copied().filter(|&p| p > 1).collect();
    match nontrivial.as_slice() {
        [] => long_cycle_sigma0(d, b, 1).map(Some),
        [3] => build_sigma0(Sigma0Variant::Triple, d, b).map(Some),
        [2, 2] => build_sigma0(Sigma0Variant::TwoTwo, d, b).map(Some),
        [len] => long_cycle_sigma0(d, b, *len).map(Some),
        _ => Ok(None),
    }
}
