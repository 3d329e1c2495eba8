//! Root systems from Cartan data.
//!
//! A [`RootSystem`] is built once from a [`CartanMatrix`] and is immutable
//! afterwards. Roots are indexed `0..n_roots`: positive roots first, sorted
//! by (height, then coordinate vector descending lexicographically) so that
//! simple root `i` receives index `i`; the negative of index `k` sits at
//! `k ± n_pos`.
//!
//! Conventions, fixed once for the whole crate:
//! - `cartan[i][j] = ⟨α_i, α_j∨⟩`.
//! - `⟨λ, α_j∨⟩ = Σ_i coords(λ)_i · cartan[i][j]`.
//! - `s_j(λ) = λ − ⟨λ, α_j∨⟩ α_j`.
//! - `‖α_i‖² / ‖α_j‖² = cartan[i][j] / cartan[j][i]` on Dynkin edges; the
//!   shortest root of each irreducible component has squared length 1.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// An integral Cartan matrix of finite type (finiteness checked at
/// [`build_root_system`] time, shape constraints at construction).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    rank: usize,
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    /// Validates shape and entry constraints: square, diagonal 2,
    /// off-diagonal in {0,−1,−2,−3}, and `A[i][j]=0 ⇔ A[j][i]=0`.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let rank = entries.len();
        if rank == 0 {
            return Err(Error::InvalidCartan(String::from("rank must be positive")));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::InvalidCartan(format!(
                    "row {i} has {} entries, expected {rank}",
                    row.len()
                )));
            }
            for (j, &a) in row.iter().enumerate() {
                if i == j && a != 2 {
                    return Err(Error::InvalidCartan(format!("diagonal entry [{i}][{i}] = {a}, expected 2")));
                }
                if i != j && !(-3..=0).contains(&a) {
                    return Err(Error::InvalidCartan(format!(
                        "off-diagonal entry [{i}][{j}] = {a}, expected 0, -1, -2 or -3"
                    )));
                }
            }
        }
        for i in 0..rank {
            for j in 0..rank {
                if (entries[i][j] == 0) != (entries[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "zero pattern not symmetric at [{i}][{j}]"
                    )));
                }
            }
        }
        Ok(CartanMatrix { rank, entries })
    }

    /// Parses a classical type name: `A_n (n≥1)`, `B_n (n≥2)`, `C_n (n≥2)`,
    /// `D_n (n≥3)`, `E6/E7/E8`, `F4`, `G2`.
    pub fn from_name(name: &str) -> Result<Self> {
        let err = || Error::UnknownTypeName(String::from(name));
        let mut chars = name.chars();
        let letter = chars.next().ok_or_else(err)?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.len() > 3 {
            return Err(err());
        }
        let n: usize = digits.parse().map_err(|_| err())?;
        let ok = match letter {
            'A' => n >= 1,
            'B' | 'C' => n >= 2,
            'D' => n >= 3,
            'E' => (6..=8).contains(&n),
            'F' => n == 4,
            'G' => n == 2,
            _ => false,
        };
        if !ok {
            return Err(err());
        }

        // Start from a simply-laced chain 0−1−…−(n−1) and adjust.
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        let link = |m: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            m[i][j] = -1;
            m[j][i] = -1;
        };
        match letter {
            'A' | 'B' | 'C' => {
                for i in 0..n.saturating_sub(1) {
                    link(&mut m, i, i + 1);
                }
                if letter == 'B' {
                    // Last simple root is short: ⟨α_{n−2}, α_{n−1}∨⟩ = −2.
                    m[n - 2][n - 1] = -2;
                } else if letter == 'C' {
                    // Last simple root is long.
                    m[n - 1][n - 2] = -2;
                }
            }
            'D' => {
                for i in 0..n - 2 {
                    link(&mut m, i, i + 1);
                }
                link(&mut m, n - 3, n - 1);
            }
            'E' => {
                // Nodes 0,2,3,4,…,n−1 form a chain; node 1 hangs off node 3.
                link(&mut m, 0, 2);
                for i in 2..n - 1 {
                    link(&mut m, i, i + 1);
                }
                link(&mut m, 1, 3);
            }
            'F' => {
                link(&mut m, 0, 1);
                link(&mut m, 2, 3);
                // Double edge between the long pair {0,1} and the short pair {2,3}.
                m[1][2] = -2;
                m[2][1] = -1;
            }
            'G' => {
                // Short root first.
                m[0][1] = -1;
                m[1][0] = -3;
            }
            _ => unreachable!(),
        }
        CartanMatrix::new(m)
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Order-independent fingerprint used to detect cross-system mixups.
    pub(crate) fn fingerprint(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut eat = |v: u64| {
            h ^= v;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        };
        eat(self.rank as u64);
        for row in &self.entries {
            for &a in row {
                eat(a as u64);
            }
        }
        h
    }
}

/// One root, with its coordinates over the simple roots and its coroot's
/// coordinates over the simple coroots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    pub index: usize,
    /// λ = Σ coords[i]·α_i; all entries ≥ 0 or all ≤ 0.
    pub coords: Vec<i64>,
    /// λ∨ = Σ coroot_coords[i]·α_i∨; always integral.
    pub coroot_coords: Vec<i64>,
    /// ‖λ‖² normalized so the shortest root of the component has 1.
    pub sq_length: i64,
    /// ht(λ) = Σ coords[i]; negative for negative roots.
    pub height: i64,
}

impl Root {
    #[inline]
    pub fn is_positive(&self) -> bool {
        self.height > 0
    }
}

/// A complete finite root system with all lookup tables populated.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan: CartanMatrix,
    roots: Vec<Root>,
    n_pos: usize,
    coord_index: BTreeMap<Vec<i64>, usize>,
    /// `reflection_table[i][r]` = index of `s_{α_i}(r)`.
    reflection_table: Vec<Vec<usize>>,
    /// `pairing_table[r][i]` = ⟨λ_r, α_i∨⟩.
    pairing_table: Vec<Vec<i64>>,
    /// BFS distance of each positive root from the set of simple roots in
    /// the height-increasing root graph.
    depth: Vec<usize>,
    /// Per positive root: (base simple index, chain letters). Applying the
    /// letters in order to the base reproduces the root.
    chains: Vec<(usize, Vec<usize>)>,
    /// Partition of simple indices into same-length connected segments.
    segments: Vec<Vec<usize>>,
    /// Per simple index: distance to its segment's special root.
    d: Vec<usize>,
    /// Per simple index: c_α = (−1)^{d(α)}.
    c: Vec<i8>,
    fingerprint: u64,
}

/// Upper bound on the number of positive roots of any finite system of the
/// given rank (E8 has 120 at rank 8; r² + 15r dominates componentwise).
fn positive_root_bound(rank: usize) -> usize {
    rank * rank + 15 * rank
}

/// Builds the full system: closure, lengths, coroots, reflection and
/// pairing tables, depth chains, and length segments.
pub fn build_root_system(cartan: CartanMatrix) -> Result<RootSystem> {
    let rank = cartan.rank();
    let bound = positive_root_bound(rank);

    // Pairing from raw coordinates, before any Root exists.
    let pair = |coords: &[i64], j: usize| -> i64 {
        (0..rank).map(|i| coords[i] * cartan.entry(i, j)).sum()
    };

    // Breadth-first closure of the simple roots under simple reflections,
    // restricted to positive roots (reflecting a positive root stays
    // positive unless the root is the simple root itself).
    let mut seen: BTreeMap<Vec<i64>, ()> = BTreeMap::new();
    let mut frontier: Vec<Vec<i64>> = Vec::new();
    for i in 0..rank {
        let mut coords = vec![0i64; rank];
        coords[i] = 1;
        seen.insert(coords.clone(), ());
        frontier.push(coords);
    }
    while let Some(coords) = frontier.pop() {
        for j in 0..rank {
            let p = pair(&coords, j);
            if p >= 0 && coords.iter().enumerate().all(|(k, &v)| v == 0 || k == j) {
                // coords is α_j itself; its reflection is −α_j.
                continue;
            }
            let mut next = coords.clone();
            next[j] -= p;
            if next[j] < 0 {
                // Only α_j can go negative under s_j; guarded above.
                return Err(Error::Internal(String::from(
                    "reflection of a positive root produced mixed signs",
                )));
            }
            if !seen.contains_key(&next) {
                if seen.len() >= bound {
                    return Err(Error::InfiniteType { bound });
                }
                seen.insert(next.clone(), ());
                frontier.push(next);
            }
        }
    }

    // Sort positives by (height asc, coords lexicographically descending) so
    // that simple root i lands at index i.
    let mut positives: Vec<Vec<i64>> = seen.into_keys().collect();
    positives.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    let n_pos = positives.len();
    let n_roots = 2 * n_pos;

    // Squared lengths of the simple roots: propagate the edge ratio
    // ‖α_i‖²/‖α_j‖² = A[i][j]/A[j][i] over each connected component as exact
    // rationals, then normalize the component minimum to 1.
    let mut sq_simple = vec![(0i64, 0i64); rank]; // (num, den), unset = (0,0)
    for start in 0..rank {
        if sq_simple[start].0 != 0 {
            continue;
        }
        let mut component = vec![start];
        sq_simple[start] = (1, 1);
        let mut queue = vec![start];
        while let Some(i) = queue.pop() {
            for j in 0..rank {
                if j == i || cartan.entry(i, j) == 0 || sq_simple[j].0 != 0 {
                    continue;
                }
                // sq_j = sq_i · A[j][i] / A[i][j]; both off-diagonal entries
                // are negative, so normalize the fraction to positive terms.
                let (ni, di) = sq_simple[i];
                let mut nj = ni * cartan.entry(j, i);
                let mut dj = di * cartan.entry(i, j);
                if dj < 0 {
                    nj = -nj;
                    dj = -dj;
                }
                let g = gcd(nj.abs(), dj.abs());
                nj /= g;
                dj /= g;
                debug_assert!(nj > 0 && dj > 0, "length ratios are positive");
                sq_simple[j] = (nj, dj);
                component.push(j);
                queue.push(j);
            }
        }
        let den_lcm = component
            .iter()
            .fold(1i64, |acc, &i| acc / gcd(acc, sq_simple[i].1) * sq_simple[i].1);
        let mut values: Vec<i64> = component
            .iter()
            .map(|&i| sq_simple[i].0 * (den_lcm / sq_simple[i].1))
            .collect();
        let min = *values.iter().min().expect("component is non-empty");
        for v in &mut values {
            if *v % min != 0 {
                return Err(Error::InvalidCartan(String::from(
                    "simple-root length ratios are not integral",
                )));
            }
            *v /= min;
        }
        for (&i, &v) in component.iter().zip(values.iter()) {
            if !matches!(v, 1 | 2 | 3) {
                return Err(Error::InvalidCartan(format!(
                    "squared length {v} outside {{1,2,3}} on component of simple root {start}"
                )));
            }
            sq_simple[i] = (v, 1);
        }
    }
    let sq_simple: Vec<i64> = sq_simple.into_iter().map(|(n, _)| n).collect();

    // Index map over positives; negatives mirrored at +n_pos.
    let mut coord_index: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for (k, coords) in positives.iter().enumerate() {
        coord_index.insert(coords.clone(), k);
        coord_index.insert(coords.iter().map(|&v| -v).collect(), k + n_pos);
    }

    // Squared lengths of all positive roots, spread along W-orbits from the
    // simples (reflections preserve length).
    let mut sq_pos = vec![0i64; n_pos];
    for i in 0..rank {
        sq_pos[i] = sq_simple[i];
    }
    let mut queue: Vec<usize> = (0..rank).collect();
    while let Some(k) = queue.pop() {
        for j in 0..rank {
            let p = pair(&positives[k], j);
            let mut next = positives[k].clone();
            next[j] -= p;
            if let Some(&idx) = coord_index.get(&next) {
                if idx < n_pos && sq_pos[idx] == 0 {
                    sq_pos[idx] = sq_pos[k];
                    queue.push(idx);
                }
            }
        }
    }
    if sq_pos.iter().any(|&v| v == 0) {
        return Err(Error::Internal(String::from("a positive root was not reached by any W-orbit")));
    }

    // Assemble Root records: positives, then mirrored negatives.
    let mut roots = Vec::with_capacity(n_roots);
    for (k, coords) in positives.iter().enumerate() {
        let height: i64 = coords.iter().sum();
        let sq = sq_pos[k];
        let mut coroot_coords = Vec::with_capacity(rank);
        for i in 0..rank {
            let num = coords[i] * sq_simple[i];
            if num % sq != 0 {
                return Err(Error::Internal(format!("coroot coordinate {i} of positive root {k} is not integral")));
            }
            coroot_coords.push(num / sq);
        }
        roots.push(Root { index: k, coords: coords.clone(), coroot_coords, sq_length: sq, height });
    }
    for k in 0..n_pos {
        let p = &roots[k];
        roots.push(Root {
            index: k + n_pos,
            coords: p.coords.iter().map(|&v| -v).collect(),
            coroot_coords: p.coroot_coords.iter().map(|&v| -v).collect(),
            sq_length: p.sq_length,
            height: -p.height,
        });
    }

    // Pairing and reflection tables.
    let pairing_table: Vec<Vec<i64>> = roots
        .iter()
        .map(|r| (0..rank).map(|j| pair(&r.coords, j)).collect())
        .collect();
    let mut reflection_table = vec![vec![0usize; n_roots]; rank];
    for (j, row) in reflection_table.iter_mut().enumerate() {
        for (k, slot) in row.iter_mut().enumerate() {
            let mut next = roots[k].coords.clone();
            next[j] -= pairing_table[k][j];
            *slot = *coord_index
                .get(&next)
                .ok_or_else(|| Error::Internal(String::from("reflection left the root set")))?;
        }
    }

    // Depth: BFS from the simple roots along height-increasing edges
    // λ → s_j(λ), which exist exactly when ⟨λ, α_j∨⟩ < 0.
    let mut depth = vec![usize::MAX; n_pos];
    let mut order: Vec<usize> = (0..rank).collect();
    for &i in &order {
        depth[i] = 0;
    }
    let mut head = 0;
    while head < order.len() {
        let k = order[head];
        head += 1;
        for j in 0..rank {
            if pairing_table[k][j] < 0 {
                let up = reflection_table[j][k];
                if depth[up] == usize::MAX {
                    depth[up] = depth[k] + 1;
                    order.push(up);
                }
            }
        }
    }
    if depth.iter().any(|&v| v == usize::MAX) {
        return Err(Error::Internal(String::from("root graph is not connected to the simples")));
    }

    // Canonical chains: predecessor of λ is s_i(λ) for the smallest simple i
    // that decreases both height and depth.
    let mut chains: Vec<(usize, Vec<usize>)> = vec![(usize::MAX, Vec::new()); n_pos];
    let mut by_depth: Vec<usize> = (0..n_pos).collect();
    by_depth.sort_by_key(|&k| depth[k]);
    for &k in &by_depth {
        if depth[k] == 0 {
            chains[k] = (k, Vec::new());
            continue;
        }
        let mut found = false;
        for j in 0..rank {
            if pairing_table[k][j] > 0 {
                let down = reflection_table[j][k];
                if down < n_pos && depth[down] + 1 == depth[k] {
                    let (base, mut letters) = chains[down].clone();
                    letters.push(j);
                    chains[k] = (base, letters);
                    found = true;
                    break;
                }
            }
        }
        if !found {
            return Err(Error::Internal(String::from("no depth-decreasing predecessor found")));
        }
    }

    // Segments: connected components of the simple roots through edges that
    // join roots of equal length.
    let mut seg_id = vec![usize::MAX; rank];
    let mut segments: Vec<Vec<usize>> = Vec::new();
    for start in 0..rank {
        if seg_id[start] != usize::MAX {
            continue;
        }
        let id = segments.len();
        let mut members = vec![start];
        seg_id[start] = id;
        let mut queue = vec![start];
        while let Some(i) = queue.pop() {
            for j in 0..rank {
                if j != i
                    && cartan.entry(i, j) != 0
                    && sq_simple[i] == sq_simple[j]
                    && seg_id[j] == usize::MAX
                {
                    seg_id[j] = id;
                    members.push(j);
                    queue.push(j);
                }
            }
        }
        members.sort_unstable();
        segments.push(members);
    }

    // Special root per segment: lowest index. d = graph distance inside the
    // segment; c = (−1)^d.
    let mut d = vec![usize::MAX; rank];
    for seg in &segments {
        let special = seg[0];
        d[special] = 0;
        let mut queue = vec![special];
        let mut head = 0;
        while head < queue.len() {
            let i = queue[head];
            head += 1;
            for &j in seg {
                if j != i && cartan.entry(i, j) != 0 && d[j] == usize::MAX {
                    d[j] = d[i] + 1;
                    queue.push(j);
                }
            }
        }
    }
    if d.iter().any(|&v| v == usize::MAX) {
        return Err(Error::Internal(String::from("a segment is not connected")));
    }
    let c: Vec<i8> = d.iter().map(|&v| if v % 2 == 0 { 1 } else { -1 }).collect();

    let fingerprint = cartan.fingerprint();
    Ok(RootSystem {
        cartan,
        roots,
        n_pos,
        coord_index,
        reflection_table,
        pairing_table,
        depth,
        chains,
        segments,
        d,
        c,
        fingerprint,
    })
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}

impl RootSystem {
    #[inline]
    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    #[inline]
    pub fn n_roots(&self) -> usize {
        self.roots.len()
    }

    #[inline]
    pub fn n_pos(&self) -> usize {
        self.n_pos
    }

    #[inline]
    pub fn root(&self, idx: usize) -> &Root {
        &self.roots[idx]
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    #[inline]
    pub fn is_positive(&self, idx: usize) -> bool {
        idx < self.n_pos
    }

    /// Index of −λ.
    #[inline]
    pub fn negate(&self, idx: usize) -> usize {
        if idx < self.n_pos {
            idx + self.n_pos
        } else {
            idx - self.n_pos
        }
    }

    /// Root index of the simple root `i`.
    #[inline]
    pub fn simple(&self, i: usize) -> usize {
        debug_assert!(i < self.rank());
        i
    }

    /// ⟨λ, α_i∨⟩ for a simple coroot.
    #[inline]
    pub fn pairing(&self, lambda: usize, i: usize) -> i64 {
        self.pairing_table[lambda][i]
    }

    /// ⟨β, γ∨⟩ for arbitrary roots, via γ∨ = Σ coroot_coords(γ)_i α_i∨.
    pub fn pairing_roots(&self, beta: usize, gamma: usize) -> i64 {
        let g = &self.roots[gamma].coroot_coords;
        self.pairing_table[beta]
            .iter()
            .zip(g.iter())
            .map(|(&p, &c)| p * c)
            .sum()
    }

    /// Index of s_{α_i}(λ).
    #[inline]
    pub fn reflect(&self, i: usize, lambda: usize) -> usize {
        self.reflection_table[i][lambda]
    }

    /// Looks up a coordinate vector; `None` if it is not a root.
    pub fn is_root(&self, coords: &[i64]) -> Option<usize> {
        self.coord_index.get(coords).copied()
    }

    /// Root index of λ + μ if that sum is a root.
    pub fn sum_index(&self, lambda: usize, mu: usize) -> Option<usize> {
        let a = &self.roots[lambda].coords;
        let b = &self.roots[mu].coords;
        let sum: Vec<i64> = a.iter().zip(b.iter()).map(|(&x, &y)| x + y).collect();
        self.is_root(&sum)
    }

    /// BFS distance of a positive root from the simples in the
    /// height-increasing root graph.
    pub fn depth(&self, lambda: usize) -> usize {
        assert!(self.is_positive(lambda), "depth is defined for positive roots");
        self.depth[lambda]
    }

    /// Shortest chain `(base simple, letters)` with
    /// `s_{i_{n−1}}(… s_{i_0}(α_base) …) = λ` and strictly increasing
    /// heights. Letters are returned in application order.
    pub fn depth_chain(&self, lambda: usize) -> (usize, &[usize]) {
        assert!(self.is_positive(lambda), "chains are defined for positive roots");
        let (base, letters) = &self.chains[lambda];
        (*base, letters)
    }

    /// Same-length connected segments of simple roots; each sorted, with the
    /// special root first.
    pub fn segments(&self) -> &[Vec<usize>] {
        &self.segments
    }

    /// Distance of simple root `i` to its segment's special root.
    #[inline]
    pub fn segment_distance(&self, i: usize) -> usize {
        self.d[i]
    }

    /// c_α = (−1)^{d(α)} for simple `i`.
    #[inline]
    pub fn c_simple(&self, i: usize) -> i8 {
        self.c[i]
    }

    #[inline]
    pub(crate) fn fingerprint(&self) -> u64 {
        self.fingerprint
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(name: &str) -> RootSystem {
        build_root_system(CartanMatrix::from_name(name).expect("name parses")).expect("finite type")
    }

    #[test]
    fn root_counts_match_classical_formulas() {
        // [DERIVED] classical counts: A_n n(n+1), B_n/C_n 2n², D_n 2n(n−1),
        // G2 12, F4 48, E6 72, E7 126, E8 240.
        for n in 1..=8 {
            assert_eq!(sys(&format!("A{n}")).n_roots(), n * (n + 1), "A{n}");
        }
        for n in 2..=8 {
            assert_eq!(sys(&format!("B{n}")).n_roots(), 2 * n * n, "B{n}");
            assert_eq!(sys(&format!("C{n}")).n_roots(), 2 * n * n, "C{n}");
        }
        for n in 3..=8 {
            assert_eq!(sys(&format!("D{n}")).n_roots(), 2 * n * (n - 1), "D{n}");
        }
        assert_eq!(sys("G2").n_roots(), 12);
        assert_eq!(sys("F4").n_roots(), 48);
        assert_eq!(sys("E6").n_roots(), 72);
        assert_eq!(sys("E7").n_roots(), 126);
        assert_eq!(sys("E8").n_roots(), 240);
    }

    #[test]
    fn simple_roots_get_their_own_indices() {
        for name in ["A3", "B4", "C3", "D4", "E6", "F4", "G2"] {
            let s = sys(name);
            for i in 0..s.rank() {
                let r = s.root(i);
                assert_eq!(r.height, 1);
                assert_eq!(r.coords[i], 1);
                assert!(r.coords.iter().enumerate().all(|(k, &v)| v == if k == i { 1 } else { 0 }));
            }
        }
    }

    #[test]
    fn a2_has_six_roots_including_the_sum() {
        // [PAPER] SL3: roots ±α, ±β, ±(α+β).
        let s = sys("A2");
        assert_eq!(s.n_roots(), 6);
        let gamma = s.is_root(&[1, 1]).expect("α+β is a root");
        assert!(s.is_positive(gamma));
        assert_eq!(s.root(gamma).height, 2);
        assert_eq!(s.is_root(&[2, 1]), None);
    }

    #[test]
    fn c2_positive_lengths_are_1_1_2_2() {
        // [DERIVED] C2 = [[2,−1],[−2,2]]: short α_0, long α_1; positive
        // roots α, β, α+β, 2α+β with ‖·‖² = 1,2,1,2.
        let s = sys("C2");
        assert_eq!(s.n_pos(), 4);
        let mut lengths: Vec<i64> = (0..4).map(|k| s.root(k).sq_length).collect();
        lengths.sort_unstable();
        assert_eq!(lengths, vec![1, 1, 2, 2]);
        assert_eq!(s.root(0).sq_length, 1);
        assert_eq!(s.root(1).sq_length, 2);
        assert!(s.is_root(&[1, 1]).is_some());
        assert!(s.is_root(&[2, 1]).is_some());
    }

    #[test]
    fn g2_highest_root_has_height_5() {
        let s = sys("G2");
        let heights: Vec<i64> = (0..s.n_pos()).map(|k| s.root(k).height).collect();
        assert_eq!(heights.iter().max(), Some(&5));
        assert!(s.is_root(&[3, 2]).is_some(), "3α+2β is the highest root");
    }

    #[test]
    fn reflections_are_involutions_and_preserve_length() {
        for name in ["A4", "B3", "C3", "D4", "F4", "G2"] {
            let s = sys(name);
            for i in 0..s.rank() {
                for k in 0..s.n_roots() {
                    let m = s.reflect(i, k);
                    assert_eq!(s.reflect(i, m), k);
                    assert_eq!(s.root(m).sq_length, s.root(k).sq_length);
                }
            }
        }
    }

    #[test]
    fn simple_reflection_negates_its_own_root() {
        for name in ["A2", "C2", "G2"] {
            let s = sys(name);
            for i in 0..s.rank() {
                assert_eq!(s.reflect(i, i), s.negate(i));
            }
        }
    }

    #[test]
    fn c2_reflection_example() {
        // [PAPER] Sp4: s_β(α) = α + β.
        let s = sys("C2");
        let sum = s.is_root(&[1, 1]).unwrap();
        assert_eq!(s.reflect(1, 0), sum);
    }

    #[test]
    fn sl3_reflection_example() {
        // [PAPER] SL3 table: s_α(γ) lands in the β root space.
        let s = sys("A2");
        let gamma = s.is_root(&[1, 1]).unwrap();
        assert_eq!(s.reflect(0, gamma), 1);
    }

    #[test]
    fn pairing_matches_table_examples() {
        // [PAPER] SL3 table rows γ and β; [TRIVIAL] diagonal.
        let s = sys("A2");
        let gamma = s.is_root(&[1, 1]).unwrap();
        assert_eq!(s.pairing(gamma, 0), 1);
        assert_eq!(s.pairing(1, 0), -1);
        for i in 0..s.rank() {
            assert_eq!(s.pairing(i, i), 2);
        }
    }

    #[test]
    fn pairing_roots_agrees_with_simple_pairing() {
        for name in ["A3", "B3", "C3", "G2"] {
            let s = sys(name);
            for k in 0..s.n_roots() {
                for i in 0..s.rank() {
                    assert_eq!(s.pairing_roots(k, s.simple(i)), s.pairing(k, i));
                }
            }
        }
    }

    #[test]
    fn coroot_coords_are_exact_and_match_definition() {
        for name in ["A4", "B4", "C4", "D4", "F4", "G2"] {
            let s = sys(name);
            for r in s.roots() {
                for i in 0..s.rank() {
                    let num = r.coords[i] * s.root(i).sq_length;
                    assert_eq!(num % r.sq_length, 0);
                    assert_eq!(r.coroot_coords[i], num / r.sq_length);
                }
                // ⟨λ, λ∨⟩ = 2 for every root.
                assert_eq!(s.pairing_roots(r.index, r.index), 2);
            }
        }
    }

    #[test]
    fn heights_equal_coordinate_sums_and_signs_are_unmixed() {
        for name in ["B3", "D4", "E6"] {
            let s = sys(name);
            for r in s.roots() {
                assert_eq!(r.height, r.coords.iter().sum::<i64>());
                let pos = r.coords.iter().all(|&v| v >= 0);
                let neg = r.coords.iter().all(|&v| v <= 0);
                assert!(pos || neg);
                assert_eq!(pos, s.is_positive(r.index));
            }
        }
    }

    #[test]
    fn negation_is_a_mirrored_index() {
        let s = sys("D4");
        for r in s.roots() {
            let n = s.negate(r.index);
            assert_eq!(s.negate(n), r.index);
            let neg_coords: Vec<i64> = r.coords.iter().map(|&v| -v).collect();
            assert_eq!(s.root(n).coords, neg_coords);
        }
    }

    #[test]
    fn depth_chains_replay_with_strictly_increasing_heights() {
        for name in ["A4", "B3", "C4", "D4", "F4", "G2"] {
            let s = sys(name);
            for k in 0..s.n_pos() {
                let (base, letters) = s.depth_chain(k);
                assert!(base < s.rank());
                assert_eq!(letters.len(), s.depth(k));
                let mut x = s.simple(base);
                let mut h = 1i64;
                for &i in letters {
                    x = s.reflect(i, x);
                    assert!(s.root(x).height > h, "height must strictly increase");
                    h = s.root(x).height;
                }
                assert_eq!(x, k, "chain replay must reproduce the root");
            }
        }
    }

    #[test]
    fn depth_is_minimal_over_the_root_graph() {
        // Independent check: depth equals BFS distance computed over the
        // explicit edge list of height-increasing reflections.
        for name in ["C3", "F4", "G2"] {
            let s = sys(name);
            let mut dist = vec![usize::MAX; s.n_pos()];
            let mut queue: Vec<usize> = (0..s.rank()).collect();
            for &i in &queue {
                dist[i] = 0;
            }
            let mut head = 0;
            while head < queue.len() {
                let k = queue[head];
                head += 1;
                for j in 0..s.rank() {
                    let m = s.reflect(j, k);
                    if m < s.n_pos() && s.root(m).height > s.root(k).height && dist[m] == usize::MAX {
                        dist[m] = dist[k] + 1;
                        queue.push(m);
                    }
                }
            }
            for k in 0..s.n_pos() {
                assert_eq!(s.depth(k), dist[k]);
            }
        }
    }

    #[test]
    fn g2_highest_root_depth_is_two() {
        // [DERIVED] 3α+2β is reached as s_β(s_α(β)): β → 3α+β → 3α+2β.
        // No longer increasing chain exists: 2α+β has no height-increasing
        // edge, so depth(3α+2β) = 2 even though its height is 5.
        let s = sys("G2");
        let top = s.is_root(&[3, 2]).unwrap();
        assert_eq!(s.depth(top), 2);
        let (base, letters) = s.depth_chain(top);
        assert_eq!(base, 1);
        assert_eq!(letters, &[0, 1]);
        // 2α+β is a dead end in the height-increasing graph.
        let dead = s.is_root(&[2, 1]).unwrap();
        for j in 0..s.rank() {
            let m = s.reflect(j, dead);
            assert!(m >= s.n_pos() || s.root(m).height <= s.root(dead).height);
        }
    }

    #[test]
    fn sl3_gamma_chain() {
        // [PAPER] k_γ is built from a simple base by one reflection. The
        // canonical chain picks base β with letter α (the other chain, base
        // α with letter β, is the paper's choice; both land on γ).
        let s = sys("A2");
        let gamma = s.is_root(&[1, 1]).unwrap();
        let (base, letters) = s.depth_chain(gamma);
        assert_eq!(letters.len(), 1);
        assert_eq!(s.reflect(letters[0], s.simple(base)), gamma);
    }

    #[test]
    fn segments_and_signs_for_a_f_g() {
        // [PAPER] A_n: single segment, c_i = (−1)^i.
        let a4 = sys("A4");
        assert_eq!(a4.segments().len(), 1);
        for i in 0..4 {
            assert_eq!(a4.c_simple(i), if i % 2 == 0 { 1 } else { -1 });
            assert_eq!(a4.segment_distance(i), i);
        }
        // [DERIVED] F4: two segments {0,1} and {2,3}, c = (1,−1,1,−1).
        let f4 = sys("F4");
        assert_eq!(f4.segments(), &[vec![0, 1], vec![2, 3]]);
        assert_eq!((0..4).map(|i| f4.c_simple(i)).collect::<Vec<_>>(), vec![1, -1, 1, -1]);
        // [DERIVED] G2: different lengths, so two singleton segments.
        let g2 = sys("G2");
        assert_eq!(g2.segments(), &[vec![0], vec![1]]);
        assert_eq!((0..2).map(|i| g2.c_simple(i)).collect::<Vec<_>>(), vec![1, 1]);
    }

    #[test]
    fn b_and_c_segment_structure() {
        // [DERIVED] B4/C4: the length break sits at the last edge.
        for name in ["B4", "C4"] {
            let s = sys(name);
            assert_eq!(s.segments(), &[vec![0, 1, 2], vec![3]]);
        }
    }

    #[test]
    fn infinite_type_is_rejected() {
        let affine = CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        match build_root_system(affine) {
            Err(Error::InfiniteType { .. }) => {}
            other => panic!("expected InfiniteType, got {other:?}"),
        }
        let rank3 = CartanMatrix::new(vec![
            vec![2, -1, -1],
            vec![-1, 2, -1],
            vec![-1, -1, 2],
        ])
        .unwrap();
        assert!(matches!(build_root_system(rank3), Err(Error::InfiniteType { .. })));
    }

    #[test]
    fn malformed_matrices_are_rejected() {
        assert!(matches!(CartanMatrix::new(vec![]), Err(Error::InvalidCartan(_))));
        assert!(matches!(
            CartanMatrix::new(vec![vec![2, -1], vec![-1, 3]]),
            Err(Error::InvalidCartan(_))
        ));
        assert!(matches!(
            CartanMatrix::new(vec![vec![2, 1], vec![-1, 2]]),
            Err(Error::InvalidCartan(_))
        ));
        assert!(matches!(
            CartanMatrix::new(vec![vec![2, -4], vec![-1, 2]]),
            Err(Error::InvalidCartan(_))
        ));
        assert!(matches!(
            CartanMatrix::new(vec![vec![2, 0], vec![-1, 2]]),
            Err(Error::InvalidCartan(_))
        ));
        assert!(matches!(
            CartanMatrix::new(vec![vec![2, -1, 0], vec![-1, 2]]),
            Err(Error::InvalidCartan(_))
        ));
    }

    #[test]
    fn named_type_parsing() {
        assert!(CartanMatrix::from_name("A1").is_ok());
        assert!(CartanMatrix::from_name("E8").is_ok());
        for bad in ["", "A", "A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "H4", "a2", "A2x", "Z9"] {
            assert!(
                matches!(CartanMatrix::from_name(bad), Err(Error::UnknownTypeName(_))),
                "{bad:?} must be rejected"
            );
        }
        // Named C2 matches the pinned matrix with the short root first.
        let c2 = CartanMatrix::from_name("C2").unwrap();
        assert_eq!(c2.entries(), &[vec![2, -1], vec![-2, 2]]);
        let g2 = CartanMatrix::from_name("G2").unwrap();
        assert_eq!(g2.entries(), &[vec![2, -1], vec![-3, 2]]);
    }

    #[test]
    fn reducible_block_diagonal_input_works() {
        // A1 × A1 as a block-diagonal matrix: 4 roots, two components.
        let m = CartanMatrix::new(vec![vec![2, 0], vec![0, 2]]).unwrap();
        let s = build_root_system(m).unwrap();
        assert_eq!(s.n_roots(), 4);
        assert_eq!(s.segments().len(), 2);
        // Mixed-length reducible input: each component normalizes to its own
        // shortest root.
        let m = CartanMatrix::new(vec![
            vec![2, 0, 0],
            vec![0, 2, -1],
            vec![0, -3, 2],
        ])
        .unwrap();
        let s = build_root_system(m).unwrap();
        assert_eq!(s.root(0).sq_length, 1);
        assert_eq!(s.root(1).sq_length, 1);
        assert_eq!(s.root(2).sq_length, 3);
    }

    #[test]
    fn w_invariance_of_sq_length_everywhere() {
        let s = sys("F4");
        for k in 0..s.n_roots() {
            for i in 0..s.rank() {
                assert_eq!(s.root(s.reflect(i, k)).sq_length, s.root(k).sq_length);
            }
        }
    }
}
