//! Structure constants of the invariant (Chevalley) basis.
//!
//! Every nonzero bracket `[𝔢_λ, 𝔢_μ] = N_{λ,μ}·𝔢_{λ+μ}` sits inside a Tits
//! triple `(λ, μ, ν)` with `λ+μ+ν = 0`. Each triple has a cyclic rotation
//! that is *ordered* (`‖λ‖ ≥ ‖μ‖ = ‖ν‖`, equivalently `⟨μ,λ∨⟩ = −1`); after
//! normalizing the first root positive, `N` is computed by a recursion that
//! walks the first root down to a simple root by simple reflections,
//! collecting `c(s_β,·)` signs. All other pairs are recovered from the
//! rotation-invariant compact sign `N_{λ,μ}/(p_{λ,μ}+1)` shared by the three
//! brackets of a triple.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::kottwitz::{BasisLabel, SignTable};
use crate::rootsys::RootSystem;

/// An integer linear combination of basis labels. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LieElement {
    terms: BTreeMap<BasisLabel, i64>,
}

impl LieElement {
    pub fn zero() -> Self {
        LieElement { terms: BTreeMap::new() }
    }

    /// The single basis vector with coefficient 1.
    pub fn basis(label: BasisLabel) -> Self {
        let mut e = LieElement::zero();
        e.add_term(label, 1);
        e
    }

    /// Adds `coeff` to the coefficient of `label`, pruning zeros.
    pub fn add_term(&mut self, label: BasisLabel, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(label).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&label);
        }
    }

    pub fn coeff(&self, label: BasisLabel) -> i64 {
        self.terms.get(&label).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (BasisLabel, i64)> + '_ {
        self.terms.iter().map(|(&l, &c)| (l, c))
    }

    pub fn scaled(&self, factor: i64) -> LieElement {
        let mut out = LieElement::zero();
        if factor != 0 {
            for (l, c) in self.iter() {
                out.add_term(l, c * factor);
            }
        }
        out
    }

    pub fn plus(&self, other: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (l, c) in other.iter() {
            out.add_term(l, c);
        }
        out
    }
}

/// Three roots summing to zero, in a definite cyclic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TitsTriple {
    pub lambda: usize,
    pub mu: usize,
    pub nu: usize,
}

impl TitsTriple {
    /// Validates that all three indices are roots with coordinate sum zero.
    pub fn new(sys: &RootSystem, lambda: usize, mu: usize, nu: usize) -> Result<Self> {
        let n = sys.n_roots();
        if lambda >= n || mu >= n || nu >= n {
            return Err(Error::NotTitsTriple);
        }
        let rank = sys.rank();
        for i in 0..rank {
            let sum = sys.root(lambda).coords[i] + sys.root(mu).coords[i] + sys.root(nu).coords[i];
            if sum != 0 {
                return Err(Error::NotTitsTriple);
            }
        }
        Ok(TitsTriple { lambda, mu, nu })
    }

    /// Completes a pair to a triple when λ+μ is a root.
    pub fn from_pair(sys: &RootSystem, lambda: usize, mu: usize) -> Option<Self> {
        let sum = sys.sum_index(lambda, mu)?;
        Some(TitsTriple { lambda, mu, nu: sys.negate(sum) })
    }
}

/// The string constant `p_{λ,μ}`: the greatest `p ≥ 0` with `μ − pλ` a
/// root (the length of the down-string through μ in the λ direction).
pub fn p_string(sys: &RootSystem, lambda: usize, mu: usize) -> i64 {
    debug_assert!(lambda != mu && lambda != sys.negate(mu), "string constant needs λ ≠ ±μ");
    let l = &sys.root(lambda).coords;
    let m = &sys.root(mu).coords;
    let mut p = 0i64;
    let mut probe: Vec<i64> = m.clone();
    loop {
        for (slot, &step) in probe.iter_mut().zip(l.iter()) {
            *slot -= step;
        }
        if sys.is_root(&probe).is_none() {
            return p;
        }
        p += 1;
        debug_assert!(p <= 3, "root strings have length at most 4");
    }
}

/// Rotates a triple into ordered position (`⟨μ,λ∨⟩ = −1`) and then negates
/// all three roots if the first is negative, reporting the flip. The first
/// valid rotation in cyclic order `(λ,μ,ν), (μ,ν,λ), (ν,λ,μ)` wins, so the
/// result is deterministic in the input rotation.
pub fn order_triple(sys: &RootSystem, t: TitsTriple) -> Result<(TitsTriple, bool)> {
    TitsTriple::new(sys, t.lambda, t.mu, t.nu)?;
    let rotations = [
        (t.lambda, t.mu, t.nu),
        (t.mu, t.nu, t.lambda),
        (t.nu, t.lambda, t.mu),
    ];
    for (l, m, n) in rotations {
        if sys.pairing_roots(m, l) == -1 {
            return if sys.is_positive(l) {
                Ok((TitsTriple { lambda: l, mu: m, nu: n }, false))
            } else {
                Ok((
                    TitsTriple {
                        lambda: sys.negate(l),
                        mu: sys.negate(m),
                        nu: sys.negate(n),
                    },
                    true,
                ))
            };
        }
    }
    // Every genuine Tits triple has an ordered rotation.
    Err(Error::Internal(alloc::string::String::from(
        "Tits triple admits no ordered rotation",
    )))
}

/// Structure constants `N_{λ,μ}` keyed by root-index pairs with λ > 0, as
/// produced by the ordered-triple recursion. `canonical` lists one key per
/// Tits-triple set (the exported table); `entries` additionally holds every
/// pair the recursion visited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTable {
    fingerprint: u64,
    entries: BTreeMap<(usize, usize), i64>,
    canonical: Vec<(usize, usize)>,
}

impl StructureTable {
    pub fn new(sys: &RootSystem) -> Self {
        StructureTable {
            fingerprint: sys.fingerprint(),
            entries: BTreeMap::new(),
            canonical: Vec::new(),
        }
    }

    pub fn get(&self, lambda: usize, mu: usize) -> Option<i64> {
        self.entries.get(&(lambda, mu)).copied()
    }

    /// Raw insertion; used by the builder and by table loaders.
    pub fn insert(&mut self, lambda: usize, mu: usize, n: i64) {
        self.entries.insert((lambda, mu), n);
    }

    pub fn push_canonical(&mut self, lambda: usize, mu: usize) {
        self.canonical.push((lambda, mu));
    }

    /// Number of memoized ordered pairs.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// One representative pair per Tits-triple set, in enumeration order.
    pub fn canonical_entries(&self) -> &[(usize, usize)] {
        &self.canonical
    }

    /// Number of Tits-triple sets.
    pub fn num_triples(&self) -> usize {
        self.canonical.len()
    }

    /// `(λ, μ, N)` rows for the canonical entries.
    pub fn canonical_rows(&self) -> Vec<(usize, usize, i64)> {
        self.canonical
            .iter()
            .map(|&(l, m)| (l, m, self.entries[&(l, m)]))
            .collect()
    }

    pub fn iter_entries(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub(crate) fn same_system(&self, sys: &RootSystem) -> bool {
        self.fingerprint == sys.fingerprint()
    }
}

/// `N_{λ,μ}` for an ordered pair (first root positive, `⟨μ,λ∨⟩ = −1`,
/// λ+μ a root), by the simple-reflection recursion:
///
/// - base: `N_{α,μ} = c(s_α,μ)·(−1)^{p_{α,μ}}·(p_{α,μ}+1)` for α simple;
/// - step: with β the smallest simple with `⟨λ,β∨⟩ > 0`,
///   `N_{λ,μ} = c(s_β,λ)·c(s_β,μ)·c(s_β,λ+μ)·N_{s_βλ, s_βμ}`
///   (the `c`-signs are involutions and `c(s_β,−ν) = c(s_β,ν)`).
pub fn n_ordered(
    sys: &RootSystem,
    signs: &SignTable,
    lambda: usize,
    mu: usize,
    memo: &mut StructureTable,
) -> Result<i64> {
    if !memo.same_system(sys) {
        return Err(Error::MismatchedSystems);
    }
    if !sys.is_positive(lambda)
        || sys.pairing_roots(mu, lambda) != -1
        || sys.sum_index(lambda, mu).is_none()
    {
        return Err(Error::NotOrdered);
    }
    n_ordered_inner(sys, signs, lambda, mu, memo)
}

fn n_ordered_inner(
    sys: &RootSystem,
    signs: &SignTable,
    lambda: usize,
    mu: usize,
    memo: &mut StructureTable,
) -> Result<i64> {
    if let Some(n) = memo.get(lambda, mu) {
        return Ok(n);
    }
    let n = if lambda < sys.rank() {
        let p = p_string(sys, lambda, mu);
        i64::from(signs.c_sign(lambda, mu)) * if p % 2 == 0 { p + 1 } else { -(p + 1) }
    } else {
        let beta = (0..sys.rank())
            .find(|&b| sys.pairing(lambda, b) > 0)
            .ok_or_else(|| Error::Internal(alloc::string::String::from(
                "positive root with no positive simple pairing",
            )))?;
        let minus_nu = sys
            .sum_index(lambda, mu)
            .ok_or(Error::NotOrdered)?;
        let sub = n_ordered_inner(sys, signs, sys.reflect(beta, lambda), sys.reflect(beta, mu), memo)?;
        i64::from(signs.c_sign(beta, lambda))
            * i64::from(signs.c_sign(beta, mu))
            * i64::from(signs.c_sign(beta, minus_nu))
            * sub
    };
    memo.insert(lambda, mu, n);
    Ok(n)
}

/// Builds the table: one recursion run per Tits-triple set, keyed by the
/// ordered rotation of the index-sorted representative.
pub fn full_table(sys: &RootSystem, signs: &SignTable) -> Result<StructureTable> {
    let mut table = StructureTable::new(sys);
    let n = sys.n_roots();
    for i1 in 0..n {
        for i2 in (i1 + 1)..n {
            let Some(sum) = sys.sum_index(i1, i2) else { continue };
            let i3 = sys.negate(sum);
            if i3 <= i2 {
                continue;
            }
            let (ordered, _flip) =
                order_triple(sys, TitsTriple { lambda: i1, mu: i2, nu: i3 })?;
            n_ordered_inner(sys, signs, ordered.lambda, ordered.mu, &mut table)?;
            table.push_canonical(ordered.lambda, ordered.mu);
        }
    }
    Ok(table)
}

/// `N_{λ,μ}` for an arbitrary pair with λ+μ a root, recovered from the
/// canonical entry of its triple: the compact sign `N/(p+1)` is shared by
/// the cyclic rotations of a triple and by its global negation, and flips
/// on the other cyclic class (antisymmetry).
pub fn structure_constant(
    sys: &RootSystem,
    table: &StructureTable,
    lambda: usize,
    mu: usize,
) -> Result<i64> {
    if !table.same_system(sys) {
        return Err(Error::MismatchedSystems);
    }
    if let Some(n) = table.get(lambda, mu) {
        return Ok(n);
    }
    let sum = sys.sum_index(lambda, mu).ok_or(Error::NotTitsTriple)?;
    let nu = sys.negate(sum);
    // Canonical rotation: the same index-sorted base full_table used.
    let mut idx = [lambda, mu, nu];
    idx.sort_unstable();
    let (ordered, flip) =
        order_triple(sys, TitsTriple { lambda: idx[0], mu: idx[1], nu: idx[2] })?;
    let stored = table
        .get(ordered.lambda, ordered.mu)
        .ok_or_else(|| Error::Internal(alloc::string::String::from(
            "canonical entry missing; table was not built by full_table",
        )))?;
    let p_canon = p_string(sys, ordered.lambda, ordered.mu);
    if stored % (p_canon + 1) != 0 {
        return Err(Error::Internal(alloc::string::String::from(
            "stored constant does not divide by its string length",
        )));
    }
    let compact = stored / (p_canon + 1);
    // Map the canonical triple back into the queried set (undo the flip)
    // and test whether (λ,μ,ν) is one of its cyclic rotations; the odd
    // class carries the opposite compact sign.
    let (a, b, c) = if flip {
        (sys.negate(ordered.lambda), sys.negate(ordered.mu), sys.negate(ordered.nu))
    } else {
        (ordered.lambda, ordered.mu, ordered.nu)
    };
    let query = (lambda, mu, nu);
    let cyclic = query == (a, b, c) || query == (b, c, a) || query == (c, a, b);
    let compact = if cyclic { compact } else { -compact };
    Ok(compact * (p_string(sys, lambda, mu) + 1))
}

/// The full bracket on the invariant basis, extended bilinearly:
/// `[𝔢_λ,𝔢_μ] = N_{λ,μ}𝔢_{λ+μ}` when λ+μ is a root, `= h_μ = Σ
/// coroot(μ)_i·h_i` when λ+μ = 0, and 0 otherwise; `[h_i, 𝔢_λ] =
/// ⟨λ,α_i∨⟩𝔢_λ`; `[h,h'] = 0`.
pub fn bracket(
    sys: &RootSystem,
    table: &StructureTable,
    x: &LieElement,
    y: &LieElement,
) -> Result<LieElement> {
    let mut out = LieElement::zero();
    for (lx, cx) in x.iter() {
        for (ly, cy) in y.iter() {
            let scale = cx * cy;
            match (lx, ly) {
                (BasisLabel::Cartan(_), BasisLabel::Cartan(_)) => {}
                (BasisLabel::Cartan(i), BasisLabel::RootVector(l)) => {
                    out.add_term(BasisLabel::RootVector(l), scale * sys.pairing(l, i));
                }
                (BasisLabel::RootVector(l), BasisLabel::Cartan(i)) => {
                    out.add_term(BasisLabel::RootVector(l), -scale * sys.pairing(l, i));
                }
                (BasisLabel::RootVector(l), BasisLabel::RootVector(m)) => {
                    if m == sys.negate(l) {
                        // [𝔢_λ, 𝔢_{−λ}] = h_{−λ}: the coroot of the second
                        // argument, matching [e_{−α}, e_α] = h_α.
                        for (i, &cc) in sys.root(m).coroot_coords.iter().enumerate() {
                            out.add_term(BasisLabel::Cartan(i), scale * cc);
                        }
                    } else if let Some(sum) = sys.sum_index(l, m) {
                        let n = structure_constant(sys, table, l, m)?;
                        out.add_term(BasisLabel::RootVector(sum), scale * n);
                    }
                }
            }
        }
    }
    Ok(out)
}
