//! Verification suites: Jacobi sweeps over the full basis, the sign-character
//! identity checks, the splitting-homomorphism checks, and the root-string
//! consistency checks. Each suite reports how many instances it checked and
//! how many failed, with the first failure described; nothing is assumed
//! proven, everything is recomputed from the data.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand_core::RngCore;

use crate::constants::{p_string, structure_constant, StructureTable, TitsTriple};
use crate::error::Result;
use crate::kottwitz::{tau, term, SignTable};
use crate::rootsys::RootSystem;
use crate::weyl::{apply_word, compose, enumerate_elements, length, WeylWord};

/// Outcome of one verification suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    /// Name of the suite, for report lines.
    pub name: &'static str,
    /// Number of individual identity instances evaluated.
    pub checked: usize,
    /// Number that failed.
    pub failures: usize,
    /// Description of the first failure, if any.
    pub first_failure: Option<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport { name, checked: 0, failures: 0, first_failure: None }
    }

    pub fn is_clean(&self) -> bool {
        self.failures == 0
    }

    /// Folds a partial report (e.g. one worker's stride) into this one. The
    /// name is kept from `self`; the first failure seen anywhere survives.
    pub fn absorb(&mut self, other: SuiteReport) {
        self.checked += other.checked;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }
}

/// One precomputed bracket `[𝔢_λ, 𝔢_μ]` of root vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BracketEntry {
    /// λ+μ is neither zero nor a root.
    Zero,
    /// `N_{λ,μ}·𝔢_{λ+μ}`.
    Root { idx: usize, n: i64 },
    /// `h_μ = Σ coroot(μ)_i·h_i` (μ is the second argument, so μ = −λ).
    Coroot { mu: usize },
}

/// Dense table of all root-vector brackets, for fast Jacobi sweeps.
/// Brackets involving Cartan generators are evaluated from the pairing on
/// the fly.
#[derive(Debug, Clone)]
pub struct BracketTable {
    n: usize,
    rank: usize,
    entries: Vec<BracketEntry>,
}

impl BracketTable {
    pub fn new(sys: &RootSystem, table: &StructureTable) -> Result<Self> {
        let n = sys.n_roots();
        let mut entries = vec![BracketEntry::Zero; n * n];
        for l in 0..n {
            for m in 0..n {
                if l == m {
                    continue;
                }
                entries[l * n + m] = if m == sys.negate(l) {
                    BracketEntry::Coroot { mu: m }
                } else if let Some(sum) = sys.sum_index(l, m) {
                    BracketEntry::Root { idx: sum, n: structure_constant(sys, table, l, m)? }
                } else {
                    BracketEntry::Zero
                };
            }
        }
        Ok(BracketTable { n, rank: sys.rank(), entries })
    }

    #[inline]
    pub fn entry(&self, l: usize, m: usize) -> BracketEntry {
        self.entries[l * self.n + m]
    }

    /// Total basis size: root vectors plus Cartan generators.
    pub fn basis_size(&self) -> usize {
        self.n + self.rank
    }
}

/// Scratch accumulators for one Jacobiator evaluation.
struct JacobiScratch {
    root_acc: Vec<i64>,
    cartan_acc: Vec<i64>,
    touched_roots: Vec<usize>,
    touched_cartans: Vec<usize>,
}

impl JacobiScratch {
    fn new(n: usize, rank: usize) -> Self {
        JacobiScratch {
            root_acc: vec![0; n],
            cartan_acc: vec![0; rank],
            touched_roots: Vec::with_capacity(8),
            touched_cartans: Vec::with_capacity(8),
        }
    }

    #[inline]
    fn add_root(&mut self, idx: usize, coeff: i64) {
        if coeff != 0 {
            self.root_acc[idx] += coeff;
            self.touched_roots.push(idx);
        }
    }

    #[inline]
    fn add_coroot(&mut self, sys: &RootSystem, mu: usize, coeff: i64) {
        for (i, &cc) in sys.root(mu).coroot_coords.iter().enumerate() {
            if cc != 0 {
                self.cartan_acc[i] += coeff * cc;
                self.touched_cartans.push(i);
            }
        }
    }

    fn is_zero_and_reset(&mut self) -> bool {
        let mut zero = true;
        for &i in &self.touched_roots {
            zero &= self.root_acc[i] == 0;
            self.root_acc[i] = 0;
        }
        for &i in &self.touched_cartans {
            zero &= self.cartan_acc[i] == 0;
            self.cartan_acc[i] = 0;
        }
        self.touched_roots.clear();
        self.touched_cartans.clear();
        zero
    }
}

/// Basis labels for the Jacobi sweep: `0..n` are root vectors, `n..n+rank`
/// are Cartan generators.
#[inline]
fn is_root_label(bt: &BracketTable, a: usize) -> bool {
    a < bt.n
}

/// Accumulates `[[x,y],z]` into the scratch buffers.
fn add_double_bracket(
    sys: &RootSystem,
    bt: &BracketTable,
    x: usize,
    y: usize,
    z: usize,
    scratch: &mut JacobiScratch,
) {
    // Inner bracket [x,y], as either coeff·𝔢_s or exactly h_μ.
    enum Inner {
        None,
        Root(usize, i64),
        Coroot(usize),
    }
    let inner = match (is_root_label(bt, x), is_root_label(bt, y)) {
        (false, false) => Inner::None,
        (false, true) => Inner::Root(y, sys.pairing(y, x - bt.n)),
        (true, false) => Inner::Root(x, -sys.pairing(x, y - bt.n)),
        (true, true) => match bt.entry(x, y) {
            BracketEntry::Zero => Inner::None,
            BracketEntry::Root { idx, n } => Inner::Root(idx, n),
            BracketEntry::Coroot { mu } => Inner::Coroot(mu),
        },
    };
    match inner {
        Inner::None => {}
        Inner::Root(s, c) => {
            if c == 0 {
                return;
            }
            if is_root_label(bt, z) {
                match bt.entry(s, z) {
                    BracketEntry::Zero => {}
                    BracketEntry::Root { idx, n } => scratch.add_root(idx, c * n),
                    BracketEntry::Coroot { mu } => scratch.add_coroot(sys, mu, c),
                }
            } else {
                scratch.add_root(s, -c * sys.pairing(s, z - bt.n));
            }
        }
        Inner::Coroot(mu) => {
            if is_root_label(bt, z) {
                scratch.add_root(z, sys.pairing_roots(z, mu));
            }
        }
    }
}

/// Evaluates the Jacobiator of one basis triple; true when it vanishes.
fn jacobi_triple(
    sys: &RootSystem,
    bt: &BracketTable,
    a: usize,
    b: usize,
    c: usize,
    scratch: &mut JacobiScratch,
) -> bool {
    add_double_bracket(sys, bt, a, b, c, scratch);
    add_double_bracket(sys, bt, b, c, a, scratch);
    add_double_bracket(sys, bt, c, a, b, scratch);
    scratch.is_zero_and_reset()
}

/// Jacobi identity over every strictly increasing basis triple. The
/// Jacobiator is alternating, so triples with a repeated element and
/// reorderings are redundant.
pub fn jacobi_exhaustive(sys: &RootSystem, bt: &BracketTable) -> SuiteReport {
    jacobi_exhaustive_strided(sys, bt, 0, 1)
}

/// The slice of the exhaustive Jacobi sweep whose smallest index `a` is
/// congruent to `offset` mod `stride`. The reports for offsets `0..stride`
/// absorb into exactly the full sweep, which lets callers fan the work out
/// over threads deterministically.
pub fn jacobi_exhaustive_strided(
    sys: &RootSystem,
    bt: &BracketTable,
    offset: usize,
    stride: usize,
) -> SuiteReport {
    let mut report = SuiteReport::new("jacobi-exhaustive");
    let size = bt.basis_size();
    let mut scratch = JacobiScratch::new(bt.n, bt.rank);
    let mut a = offset;
    while a < size {
        for b in (a + 1)..size {
            for c in (b + 1)..size {
                let ok = jacobi_triple(sys, bt, a, b, c, &mut scratch);
                report.record(ok, || format!("jacobi failed at basis triple ({a},{b},{c})"));
            }
        }
        a += stride;
    }
    report
}

/// Jacobi identity on uniformly sampled basis triples (with replacement of
/// the draw, distinct members per triple).
pub fn jacobi_sampled(
    sys: &RootSystem,
    bt: &BracketTable,
    rng: &mut impl RngCore,
    samples: usize,
) -> SuiteReport {
    let mut report = SuiteReport::new("jacobi-sampled");
    let size = bt.basis_size() as u64;
    let mut scratch = JacobiScratch::new(bt.n, bt.rank);
    let draw = |rng: &mut dyn RngCore| (rng.next_u64() % size) as usize;
    for _ in 0..samples {
        let a = draw(rng);
        let mut b = draw(rng);
        while b == a {
            b = draw(rng);
        }
        let mut c = draw(rng);
        while c == a || c == b {
            c = draw(rng);
        }
        let ok = jacobi_triple(sys, bt, a, b, c, &mut scratch);
        report.record(ok, || format!("jacobi failed at basis triple ({a},{b},{c})"));
    }
    report
}

/// Splitting checks over all Weyl elements up to `element_cap`: the
/// identity acts trivially, every `s△_i` squares to the identity, the map
/// is a homomorphism on every pair of elements, every k-basis sign is +1,
/// and roots fixed by w keep sign +1.
pub fn splitting_suite(
    sys: &RootSystem,
    signs: &SignTable,
    element_cap: usize,
) -> Result<SuiteReport> {
    use crate::kottwitz::splitting_action;
    let mut report = SuiteReport::new("splitting");
    let words = enumerate_elements(sys, element_cap)?;
    let acts: Vec<_> = words.iter().map(|w| splitting_action(sys, signs, w)).collect();
    report.record(
        splitting_action(sys, signs, &WeylWord::identity()).is_identity(),
        || String::from("identity element does not act trivially"),
    );
    for i in 0..sys.rank() {
        let sq = splitting_action(sys, signs, &WeylWord::new(vec![i, i]));
        report.record(sq.is_identity(), || format!("s△_{i} does not square to the identity"));
    }
    for (wi, act) in acts.iter().enumerate() {
        for lambda in 0..sys.n_roots() {
            report.record(act.sign(lambda) == 1, || {
                format!("k-sign not +1 at element {wi}, root {lambda}")
            });
            if act.perm(lambda) == lambda {
                report.record(act.sign(lambda) == 1, || {
                    format!("fixed root {lambda} picks up a sign at element {wi}")
                });
            }
        }
    }
    for (xi, x) in words.iter().enumerate() {
        for (yi, y) in words.iter().enumerate() {
            let composed = compose(&acts[xi], &acts[yi])?;
            let direct = splitting_action(sys, signs, &x.then(y));
            report.record(composed == direct, || {
                format!("homomorphism fails at the pair of elements ({xi},{yi})")
            });
        }
    }
    Ok(report)
}

/// Spot-checks of the splitting on random word pairs, for systems whose
/// Weyl group is too large to enumerate: the homomorphism property on each
/// pair, every k-basis sign +1 under both factors, squares of random
/// generators, and the sign at roots fixed by the sampled element.
pub fn splitting_sampled(
    sys: &RootSystem,
    signs: &SignTable,
    rng: &mut impl RngCore,
    samples: usize,
) -> Result<SuiteReport> {
    use crate::kottwitz::splitting_action;
    let mut report = SuiteReport::new("splitting-sampled");
    let rank = sys.rank() as u64;
    let n = sys.n_roots();
    let random_word = |rng: &mut dyn RngCore| {
        let len = 1 + (rng.next_u64() % (2 * rank)) as usize;
        WeylWord::new((0..len).map(|_| (rng.next_u64() % rank) as usize).collect())
    };
    for _ in 0..samples {
        let x = random_word(rng);
        let y = random_word(rng);
        let ax = splitting_action(sys, signs, &x);
        let ay = splitting_action(sys, signs, &y);
        let direct = splitting_action(sys, signs, &x.then(&y));
        report.record(compose(&ax, &ay)? == direct, || {
            format!("homomorphism fails at the pair ({:?},{:?})", x.letters, y.letters)
        });
        for lambda in 0..n {
            report.record(ax.sign(lambda) == 1 && ay.sign(lambda) == 1, || {
                format!("k-sign not +1 at root {lambda} under {:?} or {:?}", x.letters, y.letters)
            });
            if direct.perm(lambda) == lambda {
                report.record(direct.sign(lambda) == 1, || {
                    format!("fixed root {lambda} picks up a sign under {:?}∘{:?}", x.letters, y.letters)
                });
            }
        }
        let i = (rng.next_u64() % rank) as usize;
        let sq = splitting_action(sys, signs, &WeylWord::new(vec![i, i]));
        report.record(sq.is_identity(), || format!("s△_{i} does not square to the identity"));
    }
    Ok(report)
}

/// Root-string and structure-constant consistency over every bracket pair:
/// `|N_{λ,μ}| = p_{λ,μ}+1`, antisymmetry, invariance under global negation,
/// the shared compact sign across the rotations of each triple, the twisted
/// cyclic symmetry `(p_{λ,μ}+1)·‖λ‖² = (p_{μ,ν}+1)·‖ν‖²`, the down-string
/// fast path, and Weyl equivariance through the `c`-signs.
pub fn strings_suite(
    sys: &RootSystem,
    signs: &SignTable,
    table: &StructureTable,
) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("strings");
    let n = sys.n_roots();
    for l in 0..n {
        for m in 0..n {
            if l == m || m == sys.negate(l) {
                continue;
            }
            let p = p_string(sys, l, m);
            if sys.pairing_roots(m, l) <= 0 {
                let diff: Vec<i64> = sys
                    .root(m)
                    .coords
                    .iter()
                    .zip(sys.root(l).coords.iter())
                    .map(|(&a, &b)| a - b)
                    .collect();
                let fast = i64::from(sys.is_root(&diff).is_some());
                report.record(p == fast, || format!("down-string fast path differs at ({l},{m})"));
            }
            let Some(t) = TitsTriple::from_pair(sys, l, m) else { continue };
            let n_lm = structure_constant(sys, table, l, m)?;
            report.record(n_lm.abs() == p + 1, || {
                format!("|N| ≠ p+1 at ({l},{m}): N = {n_lm}, p = {p}")
            });
            let n_ml = structure_constant(sys, table, m, l)?;
            report.record(n_ml == -n_lm, || format!("antisymmetry fails at ({l},{m})"));
            let n_neg = structure_constant(sys, table, sys.negate(l), sys.negate(m))?;
            report.record(n_neg == n_lm, || format!("negation invariance fails at ({l},{m})"));
            let n_rot = structure_constant(sys, table, t.mu, t.nu)?;
            let p_rot = p_string(sys, t.mu, t.nu);
            report.record(n_lm.signum() == n_rot.signum(), || {
                format!("compact sign differs between rotations of the triple at ({l},{m})")
            });
            let q_lhs = (p + 1) * sys.root(t.lambda).sq_length;
            let q_rhs = (p_rot + 1) * sys.root(t.nu).sq_length;
            report.record(q_lhs == q_rhs, || {
                format!("twisted cyclic symmetry fails at ({l},{m})")
            });
            for beta in 0..sys.rank() {
                let sum = sys.sum_index(l, m).expect("pair of a triple");
                let n_refl =
                    structure_constant(sys, table, sys.reflect(beta, l), sys.reflect(beta, m))?;
                let lhs = i64::from(signs.c_sign(beta, l)) * i64::from(signs.c_sign(beta, m)) * n_refl;
                let rhs = i64::from(signs.c_sign(beta, sum)) * n_lm;
                report.record(lhs == rhs, || {
                    format!("Weyl equivariance fails at ({l},{m}) for s_{beta}")
                });
            }
        }
    }
    Ok(report)
}

/// The sign-character identities, exhaustively over all Weyl elements up to
/// `element_cap` (intended for rank ≤ 3):
///
/// - (a′) `τ_1 ≡ 1`;
/// - (b′) `τ_{s_i y}(β) = τ_{s_i}(yβ)·τ_y(β)` when lengths add;
/// - (c′) `(−1)^{⟨β,α∨⟩} = τ_{s_α}(s_αβ)·τ_{s_α}(β)`;
/// - the pairing-term negation identity
///   `⟨⟨β,γ⟩⟩ + ⟨⟨−β,γ⟩⟩ ≡ ⟨β,γ∨⟩ mod 2`;
/// - Weyl invariance of the pairing term;
/// - the height identity `ht(wβ) − ht(β) = −Σ_{γ∈R_w}⟨β,γ∨⟩`;
/// - the height-parity relation between the 𝔢-signs of the splitting at
///   ±λ: `e_w(λ) = (−1)^{ht(wλ)−ht(λ)}·e_w(−λ)`.
pub fn identities_exhaustive(
    sys: &RootSystem,
    signs: &SignTable,
    element_cap: usize,
) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("identities-exhaustive");
    let words = enumerate_elements(sys, element_cap)?;
    let n = sys.n_roots();
    for beta in 0..n {
        report.record(tau(sys, &WeylWord::identity(), beta) == 1, || {
            format!("τ_1(β) ≠ 1 at β = {beta}")
        });
        for gamma in 0..n {
            if gamma == beta || gamma == sys.negate(beta) {
                continue;
            }
            check_term_negation(sys, beta, gamma, &mut report);
            for i in 0..sys.rank() {
                let lhs = term(sys, sys.reflect(i, beta), sys.reflect(i, gamma));
                report.record(lhs == term(sys, beta, gamma), || {
                    format!("pairing term is not s_{i}-invariant at ({beta},{gamma})")
                });
            }
        }
        for alpha in 0..sys.rank() {
            let w = WeylWord::new(vec![alpha]);
            let lhs = if sys.pairing(beta, alpha) % 2 == 0 { 1 } else { -1 };
            let rhs = tau(sys, &w, sys.reflect(alpha, beta)) * tau(sys, &w, beta);
            report.record(lhs == rhs, || format!("(c′) fails at (α_{alpha}, β = {beta})"));
        }
    }
    for y in &words {
        check_height_and_parity(sys, signs, y, 0..n, &mut report);
        for i in 0..sys.rank() {
            let mut letters = vec![i];
            letters.extend_from_slice(&y.letters);
            let siy = WeylWord::new(letters);
            if length(sys, &siy) != length(sys, y) + 1 {
                continue;
            }
            let si = WeylWord::new(vec![i]);
            for beta in 0..n {
                let ybeta = apply_word(sys, y, beta);
                let lhs = tau(sys, &siy, beta);
                let rhs = tau(sys, &si, ybeta) * tau(sys, y, beta);
                report.record(lhs == rhs, || {
                    format!("(b′) fails at y = {:?}, i = {i}, β = {beta}", y.letters)
                });
            }
        }
    }
    Ok(report)
}

/// The same identities on random words and random roots, for systems whose
/// Weyl group is too large to enumerate.
pub fn identities_sampled(
    sys: &RootSystem,
    signs: &SignTable,
    rng: &mut impl RngCore,
    samples: usize,
) -> SuiteReport {
    let mut report = SuiteReport::new("identities-sampled");
    let n = sys.n_roots() as u64;
    let rank = sys.rank() as u64;
    for _ in 0..samples {
        let beta = (rng.next_u64() % n) as usize;
        let mut gamma = (rng.next_u64() % n) as usize;
        while gamma == beta || gamma == sys.negate(beta) {
            gamma = (rng.next_u64() % n) as usize;
        }
        check_term_negation(sys, beta, gamma, &mut report);
        let word_len = 1 + (rng.next_u64() % (2 * rank)) as usize;
        let letters: Vec<usize> =
            (0..word_len).map(|_| (rng.next_u64() % rank) as usize).collect();
        let y = WeylWord::new(letters);
        // A random handful of roots per word keeps large types affordable.
        let sample_betas: Vec<usize> =
            (0..8).map(|_| (rng.next_u64() % n) as usize).collect();
        check_height_and_parity(sys, signs, &y, sample_betas.into_iter(), &mut report);
        let i = (rng.next_u64() % rank) as usize;
        let mut letters = vec![i];
        letters.extend_from_slice(&y.letters);
        let siy = WeylWord::new(letters);
        if length(sys, &siy) == length(sys, &y) + 1 {
            let ybeta = apply_word(sys, &y, beta);
            let lhs = tau(sys, &siy, beta);
            let rhs = tau(sys, &WeylWord::new(vec![i]), ybeta) * tau(sys, &y, beta);
            report.record(lhs == rhs, || {
                format!("(b′) fails at y = {:?}, i = {i}, β = {beta}", y.letters)
            });
        }
        let alpha = (rng.next_u64() % rank) as usize;
        let w = WeylWord::new(vec![alpha]);
        let lhs = if sys.pairing(beta, alpha) % 2 == 0 { 1 } else { -1 };
        let rhs = tau(sys, &w, sys.reflect(alpha, beta)) * tau(sys, &w, beta);
        report.record(lhs == rhs, || format!("(c′) fails at (α_{alpha}, β = {beta})"));
    }
    report
}

fn check_term_negation(sys: &RootSystem, beta: usize, gamma: usize, report: &mut SuiteReport) {
    let lhs = (term(sys, beta, gamma) + term(sys, sys.negate(beta), gamma)) % 2;
    let rhs = (sys.pairing_roots(beta, gamma).rem_euclid(2)) as u8;
    report.record(lhs == rhs, || {
        format!("term negation identity fails at (β = {beta}, γ = {gamma})")
    });
}

fn check_height_and_parity(
    sys: &RootSystem,
    signs: &SignTable,
    w: &WeylWord,
    betas: impl Iterator<Item = usize>,
    report: &mut SuiteReport,
) {
    use crate::kottwitz::splitting_action;
    use crate::weyl::inversion_set;
    let act = splitting_action(sys, signs, w);
    let inv = inversion_set(sys, w);
    for beta in betas {
        let defect: i64 = -inv.iter().map(|&g| sys.pairing_roots(beta, g)).sum::<i64>();
        let direct = sys.root(apply_word(sys, w, beta)).height - sys.root(beta).height;
        report.record(defect == direct, || {
            format!("height identity fails at w = {:?}, β = {beta}", w.letters)
        });
        // 𝔢-signs recovered from the k-action by unwinding the γ transport.
        let e_here = i64::from(act.sign(beta))
            * i64::from(signs.gamma(beta))
            * i64::from(signs.gamma(act.perm(beta)));
        let nb = sys.negate(beta);
        let e_there = i64::from(act.sign(nb))
            * i64::from(signs.gamma(nb))
            * i64::from(signs.gamma(act.perm(nb)));
        let parity = if defect % 2 == 0 { 1 } else { -1 };
        report.record(e_here == parity * e_there, || {
            format!("height-parity relation fails at w = {:?}, β = {beta}", w.letters)
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::full_table;
    use crate::rootsys::{build_root_system, CartanMatrix};
    use rand::rngs::SmallRng;
    use rand::SeedableRng;

    fn setup(name: &str) -> (RootSystem, SignTable, StructureTable) {
        let s = build_root_system(CartanMatrix::from_name(name).unwrap()).unwrap();
        let t = SignTable::new(&s);
        let table = full_table(&s, &t).unwrap();
        (s, t, table)
    }

    #[test]
    fn jacobi_exhaustive_small_types() {
        for name in ["A2", "B2", "G2", "C3"] {
            let (s, _, table) = setup(name);
            let bt = BracketTable::new(&s, &table).unwrap();
            let report = jacobi_exhaustive(&s, &bt);
            assert!(report.is_clean(), "{name}: {:?}", report.first_failure);
            let size = bt.basis_size();
            assert_eq!(report.checked, size * (size - 1) * (size - 2) / 6);
        }
    }

    #[test]
    fn jacobi_catches_magnitude_corruption() {
        let (s, _, mut table) = setup("A2");
        table.insert(0, 1, 7);
        let bt = BracketTable::new(&s, &table).unwrap();
        let report = jacobi_exhaustive(&s, &bt);
        assert!(report.failures > 0);
        assert!(report.first_failure.is_some());
    }

    #[test]
    fn jacobi_catches_sign_corruption() {
        // Flipping one triple's sign without flipping a basis vector is not
        // a basis change, so the Jacobi identity must break.
        let (s, _, mut table) = setup("A2");
        let old = table.get(0, 1).unwrap();
        table.insert(0, 1, -old);
        let bt = BracketTable::new(&s, &table).unwrap();
        let report = jacobi_exhaustive(&s, &bt);
        assert!(report.failures > 0);
    }

    #[test]
    fn strided_jacobi_partitions_the_full_sweep() {
        let (s, _, table) = setup("B3");
        let bt = BracketTable::new(&s, &table).unwrap();
        let full = jacobi_exhaustive(&s, &bt);
        for stride in [2usize, 3, 5] {
            let mut merged = jacobi_exhaustive_strided(&s, &bt, 0, stride);
            for offset in 1..stride {
                merged.absorb(jacobi_exhaustive_strided(&s, &bt, offset, stride));
            }
            assert_eq!(merged.checked, full.checked);
            assert_eq!(merged.failures, full.failures);
        }
    }

    #[test]
    fn absorb_keeps_earliest_failure_and_sums_counts() {
        let mut a = SuiteReport::new("x");
        a.record(true, || unreachable!());
        let mut b = SuiteReport::new("x");
        b.record(false, || String::from("boom"));
        a.absorb(b);
        assert_eq!((a.checked, a.failures), (2, 1));
        assert_eq!(a.first_failure.as_deref(), Some("boom"));
    }

    #[test]
    fn splitting_sampled_clean_on_large_types() {
        for name in ["D5", "E6"] {
            let s = build_root_system(CartanMatrix::from_name(name).unwrap()).unwrap();
            let signs = SignTable::new(&s);
            let mut rng = SmallRng::seed_from_u64(23);
            let report = splitting_sampled(&s, &signs, &mut rng, 40).unwrap();
            assert!(report.is_clean(), "{name}: {:?}", report.first_failure);
            assert!(report.checked > 40);
        }
    }

    #[test]
    fn jacobi_sampled_smoke() {
        let (s, _, table) = setup("F4");
        let bt = BracketTable::new(&s, &table).unwrap();
        let mut rng = SmallRng::seed_from_u64(7);
        let report = jacobi_sampled(&s, &bt, &mut rng, 10_000);
        assert!(report.is_clean(), "{:?}", report.first_failure);
        assert_eq!(report.checked, 10_000);
    }

    #[test]
    fn splitting_suite_small_types() {
        for name in ["A2", "C2", "B3"] {
            let (s, signs, _) = setup(name);
            let report = splitting_suite(&s, &signs, 400).unwrap();
            assert!(report.is_clean(), "{name}: {:?}", report.first_failure);
        }
    }

    #[test]
    fn strings_suite_small_types() {
        for name in ["A3", "B3", "C3", "G2", "F4"] {
            let (s, signs, table) = setup(name);
            let report = strings_suite(&s, &signs, &table).unwrap();
            assert!(report.is_clean(), "{name}: {:?}", report.first_failure);
        }
    }

    #[test]
    fn identities_exhaustive_small_types() {
        for name in ["A2", "B2", "C3"] {
            let (s, signs, _) = setup(name);
            let report = identities_exhaustive(&s, &signs, 400).unwrap();
            assert!(report.is_clean(), "{name}: {:?}", report.first_failure);
        }
    }

    #[test]
    fn identities_sampled_smoke() {
        for name in ["D4", "B5"] {
            let (s, signs, _) = setup(name);
            let mut rng = SmallRng::seed_from_u64(11);
            let report = identities_sampled(&s, &signs, &mut rng, 500);
            assert!(report.is_clean(), "{name}: {:?}", report.first_failure);
            assert!(report.checked >= 500);
        }
    }
}
