//! Weyl group elements as words and as signed permutations of the roots.
//!
//! Elements are canonically identified by their action on the root set;
//! words are input syntax only. A [`SignedPermutation`] additionally carries
//! a ±1 sign per root, modeling how a lift of the element acts on a basis of
//! root vectors under the adjoint action.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;

/// A (not necessarily reduced) word in the simple reflections.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeylWord {
    /// Simple-reflection indices; every letter must be `< rank`.
    pub letters: Vec<usize>,
}

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord { letters }
    }

    pub fn identity() -> Self {
        WeylWord { letters: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation: `(x·y)(λ) = x(y(λ))`.
    pub fn then(&self, rhs: &WeylWord) -> WeylWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        WeylWord { letters }
    }
}

impl From<Vec<usize>> for WeylWord {
    fn from(letters: Vec<usize>) -> Self {
        WeylWord { letters }
    }
}

/// Applies a word to a root: `apply_word([i_1,…,i_n], λ) = s_{i_1}(…s_{i_n}(λ))`.
pub fn apply_word(sys: &RootSystem, w: &WeylWord, lambda: usize) -> usize {
    let mut x = lambda;
    for &i in w.letters.iter().rev() {
        x = sys.reflect(i, x);
    }
    x
}

/// The permutation of all roots induced by a word.
pub fn word_permutation(sys: &RootSystem, w: &WeylWord) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..sys.n_roots()).collect();
    for &i in w.letters.iter().rev() {
        for slot in perm.iter_mut() {
            *slot = sys.reflect(i, *slot);
        }
    }
    // The loop applies letters right-to-left to each tracked image, so
    // perm[λ] = w(λ).
    let mut out = vec![0usize; sys.n_roots()];
    for (lambda, &img) in perm.iter().enumerate() {
        out[lambda] = img;
    }
    out
}

/// R_w = {λ > 0 : w(λ) < 0}, returned as sorted positive root indices.
/// Word-independent: only the underlying element matters.
pub fn inversion_set(sys: &RootSystem, w: &WeylWord) -> Vec<usize> {
    let mut out = Vec::new();
    for lambda in 0..sys.n_pos() {
        if !sys.is_positive(apply_word(sys, w, lambda)) {
            out.push(lambda);
        }
    }
    out
}

/// The length ℓ(w) = |R_w|.
pub fn length(sys: &RootSystem, w: &WeylWord) -> usize {
    inversion_set(sys, w).len()
}

/// A root permutation together with a ±1 sign per root: the adjoint action
/// of a normalizer element on a root-vector basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermutation {
    fingerprint: u64,
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    /// Builds from parts; `perm` must be a bijection commuting with
    /// negation and `signs` entries must be ±1.
    pub fn new(sys: &RootSystem, perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = sys.n_roots();
        if perm.len() != n || signs.len() != n {
            return Err(Error::MismatchedSystems);
        }
        let mut seen = vec![false; n];
        for (lambda, &img) in perm.iter().enumerate() {
            if img >= n || seen[img] {
                return Err(Error::Internal(alloc::string::String::from(
                    "signed permutation is not a bijection",
                )));
            }
            seen[img] = true;
            if perm[sys.negate(lambda)] != sys.negate(img) {
                return Err(Error::Internal(alloc::string::String::from(
                    "permutation does not commute with negation",
                )));
            }
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Internal(alloc::string::String::from("signs must be ±1")));
        }
        Ok(SignedPermutation { fingerprint: sys.fingerprint(), perm, signs })
    }

    pub fn identity(sys: &RootSystem) -> Self {
        SignedPermutation {
            fingerprint: sys.fingerprint(),
            perm: (0..sys.n_roots()).collect(),
            signs: vec![1; sys.n_roots()],
        }
    }

    #[inline]
    pub fn n_roots(&self) -> usize {
        self.perm.len()
    }

    /// Image of a root index under the underlying Weyl element.
    #[inline]
    pub fn perm(&self, lambda: usize) -> usize {
        self.perm[lambda]
    }

    /// Sign with which the element acts on the basis vector at λ.
    #[inline]
    pub fn sign(&self, lambda: usize) -> i8 {
        self.signs[lambda]
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p == i) && self.signs.iter().all(|&s| s == 1)
    }

    /// True if both values were built over the same root system.
    pub fn same_system(&self, other: &SignedPermutation) -> bool {
        self.fingerprint == other.fingerprint && self.perm.len() == other.perm.len()
    }
}

/// Composition: `(a∘b).perm(λ) = a.perm(b.perm(λ))` and
/// `(a∘b).sign(λ) = a.sign(b.perm(λ)) · b.sign(λ)`.
pub fn compose(a: &SignedPermutation, b: &SignedPermutation) -> Result<SignedPermutation> {
    if !a.same_system(b) {
        return Err(Error::MismatchedSystems);
    }
    let n = a.perm.len();
    let mut perm = vec![0usize; n];
    let mut signs = vec![1i8; n];
    for lambda in 0..n {
        let mid = b.perm[lambda];
        perm[lambda] = a.perm[mid];
        signs[lambda] = a.signs[mid] * b.signs[lambda];
    }
    Ok(SignedPermutation { fingerprint: a.fingerprint, perm, signs })
}

/// Enumerates the whole Weyl group as reduced words, breadth-first, so the
/// first word found for each element is reduced. Errors if the group has
/// more than `cap` elements. Intended for small-rank exhaustive suites.
pub fn enumerate_elements(sys: &RootSystem, cap: usize) -> Result<Vec<WeylWord>> {
    use alloc::collections::BTreeMap;
    let id: Vec<usize> = (0..sys.n_roots()).collect();
    let mut seen: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
    seen.insert(id.clone(), ());
    let mut words = vec![WeylWord::identity()];
    let mut perms = vec![id];
    let mut head = 0;
    while head < words.len() {
        let word = words[head].clone();
        let perm = perms[head].clone();
        head += 1;
        for i in 0..sys.rank() {
            // Right multiplication by s_i: (w·s_i)(λ) = w(s_i(λ)).
            let next_perm: Vec<usize> = (0..sys.n_roots()).map(|l| perm[sys.reflect(i, l)]).collect();
            if !seen.contains_key(&next_perm) {
                if words.len() >= cap {
                    return Err(Error::Internal(alloc::string::String::from(
                        "Weyl group larger than enumeration cap",
                    )));
                }
                seen.insert(next_perm.clone(), ());
                let mut letters = word.letters.clone();
                letters.push(i);
                words.push(WeylWord::new(letters));
                perms.push(next_perm);
            }
        }
    }
    Ok(words)
}
