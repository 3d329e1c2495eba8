//! Independent integer-matrix oracle for the classical frames.
//!
//! For type A (traceless matrices, rank ≤ 7) and type C (symplectic
//! matrices, rank ≤ 4) the canonical basis is replayed inside an explicit
//! matrix algebra: simple-root vectors are fixed unit patterns, the Weyl
//! representatives are `σ_i = exp(e_i)·exp(f_i)·exp(e_i)`, and each `k_λ`
//! is produced by conjugating along the descent chain of λ with the same
//! per-step sign the splitting uses. Every bracket of the abstract basis is
//! then checked against a literal matrix commutator. All arithmetic is
//! exact integer arithmetic; the factorial divisions in the nilpotent
//! exponential are asserted to be exact.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::constants::{structure_constant, StructureTable};
use crate::error::{Error, Result};
use crate::kottwitz::SignTable;
use crate::rootsys::{CartanMatrix, RootSystem};

/// A dense square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(dim: usize) -> Self {
        IntMatrix { dim, data: vec![0; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = IntMatrix::zero(dim);
        for i in 0..dim {
            m.data[i * dim + i] = 1;
        }
        m
    }

    /// The matrix unit `E_{i,j}` (single 1 in row i, column j).
    pub fn unit(dim: usize, i: usize, j: usize) -> Self {
        let mut m = IntMatrix::zero(dim);
        m.data[i * dim + j] = 1;
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.dim + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn plus(&self, other: &IntMatrix) -> IntMatrix {
        debug_assert_eq!(self.dim, other.dim);
        IntMatrix {
            dim: self.dim,
            data: self.data.iter().zip(other.data.iter()).map(|(&a, &b)| a + b).collect(),
        }
    }

    pub fn minus(&self, other: &IntMatrix) -> IntMatrix {
        debug_assert_eq!(self.dim, other.dim);
        IntMatrix {
            dim: self.dim,
            data: self.data.iter().zip(other.data.iter()).map(|(&a, &b)| a - b).collect(),
        }
    }

    pub fn scaled(&self, factor: i64) -> IntMatrix {
        IntMatrix { dim: self.dim, data: self.data.iter().map(|&a| a * factor).collect() }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        debug_assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut out = IntMatrix::zero(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                if a == 0 {
                    continue;
                }
                for j in 0..d {
                    out.data[i * d + j] += a * other.data[k * d + j];
                }
            }
        }
        out
    }

    /// `[A,B] = AB − BA`.
    pub fn commutator(&self, other: &IntMatrix) -> IntMatrix {
        self.mul(other).minus(&other.mul(self))
    }

    pub fn transpose(&self) -> IntMatrix {
        let d = self.dim;
        let mut out = IntMatrix::zero(d);
        for i in 0..d {
            for j in 0..d {
                out.data[j * d + i] = self.data[i * d + j];
            }
        }
        out
    }

    /// Position and value of the first nonzero entry in row-major order.
    pub fn leading_entry(&self) -> Option<(usize, usize, i64)> {
        self.data
            .iter()
            .position(|&v| v != 0)
            .map(|pos| (pos / self.dim, pos % self.dim, self.data[pos]))
    }
}

/// `exp(M)` for a nilpotent integer matrix. Each term `M^k/k!` must be an
/// integer matrix (true for the unipotent one-parameter subgroups used
/// here); a nonzero power past the dimension, or an inexact division,
/// reports `NonNilpotent`.
pub fn exp_nilpotent(m: &IntMatrix) -> Result<IntMatrix> {
    let dim = m.dim;
    let mut sum = IntMatrix::identity(dim);
    let mut power = m.clone();
    let mut k = 1i64;
    while !power.is_zero() {
        if k as usize > dim {
            return Err(Error::NonNilpotent);
        }
        sum = sum.plus(&power);
        k += 1;
        let next = power.mul(m);
        if next.data.iter().any(|&v| v % k != 0) {
            return Err(Error::NonNilpotent);
        }
        power = IntMatrix { dim, data: next.data.iter().map(|&v| v / k).collect() };
    }
    Ok(sum)
}

/// The Weyl representative `σ = exp(e)·exp(f)·exp(e)` of an sl2 pair.
pub fn sigma_matrix(e: &IntMatrix, f: &IntMatrix) -> Result<IntMatrix> {
    Ok(exp_nilpotent(e)?.mul(&exp_nilpotent(f)?).mul(&exp_nilpotent(e)?))
}

/// Which classical matrix model a frame realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameType {
    /// Type A_n as traceless (n+1)×(n+1) matrices.
    SpecialLinear,
    /// Type C_n as symplectic 2n×2n matrices, torus slots
    /// (ε_0,…,ε_{n−1},−ε_{n−1},…,−ε_0).
    Symplectic,
}

/// A concrete matrix realization: simple root vectors, their negatives,
/// and coroot matrices `h_i = [f_i, e_i]`.
#[derive(Debug, Clone)]
pub struct MatrixFrame {
    pub frame_type: FrameType,
    pub rank: usize,
    pub dim: usize,
    pub e_pos: Vec<IntMatrix>,
    pub e_neg: Vec<IntMatrix>,
    pub h: Vec<IntMatrix>,
}

/// Builds the frame for a supported type: A with rank ≤ 7, C with
/// 2 ≤ rank ≤ 4.
pub fn frame(frame_type: FrameType, rank: usize) -> Result<MatrixFrame> {
    let dim = match frame_type {
        FrameType::SpecialLinear => {
            if rank == 0 || rank > 7 {
                return Err(Error::UnsupportedFrame(format!(
                    "special linear frame supports rank 1..=7, got {rank}"
                )));
            }
            rank + 1
        }
        FrameType::Symplectic => {
            if !(2..=4).contains(&rank) {
                return Err(Error::UnsupportedFrame(format!(
                    "symplectic frame supports rank 2..=4, got {rank}"
                )));
            }
            2 * rank
        }
    };
    let mut e_pos = Vec::with_capacity(rank);
    let mut e_neg = Vec::with_capacity(rank);
    match frame_type {
        FrameType::SpecialLinear => {
            for i in 0..rank {
                e_pos.push(IntMatrix::unit(dim, i, i + 1));
                e_neg.push(IntMatrix::unit(dim, i + 1, i).scaled(-1));
            }
        }
        FrameType::Symplectic => {
            let n = rank;
            for i in 0..n - 1 {
                e_pos.push(
                    IntMatrix::unit(dim, i, i + 1)
                        .minus(&IntMatrix::unit(dim, 2 * n - 2 - i, 2 * n - 1 - i)),
                );
                e_neg.push(
                    IntMatrix::unit(dim, 2 * n - 1 - i, 2 * n - 2 - i)
                        .minus(&IntMatrix::unit(dim, i + 1, i)),
                );
            }
            e_pos.push(IntMatrix::unit(dim, n - 1, n));
            e_neg.push(IntMatrix::unit(dim, n, n - 1).scaled(-1));
        }
    }
    let h = e_neg.iter().zip(e_pos.iter()).map(|(f, e)| f.commutator(e)).collect();
    Ok(MatrixFrame { frame_type, rank, dim, e_pos, e_neg, h })
}

/// Picks the frame matching a root system's Cartan matrix, if any.
pub fn frame_for(sys: &RootSystem) -> Result<MatrixFrame> {
    let rank = sys.rank();
    for (letter, ft) in [("A", FrameType::SpecialLinear), ("C", FrameType::Symplectic)] {
        if let Ok(m) = CartanMatrix::from_name(&format!("{letter}{rank}")) {
            if m.entries() == sys.cartan().entries() {
                return frame(ft, rank);
            }
        }
    }
    Err(Error::UnsupportedFrame(format!(
        "no matrix oracle for this Cartan matrix (rank {rank}); supported: A1..A7, C2..C4"
    )))
}

/// Replays every `k_λ` inside the frame: `k_{α} = c_α·e_α` on simple roots
/// and their negatives, then one conjugation `k ↦ (−1)^{⟨⟨λ,α⟩⟩}·σ_α k
/// σ_α^{−1}` per descent-chain letter, mirrored to the negative roots.
/// Each result is checked to lie in the expected root space.
pub fn k_basis_matrices(
    sys: &RootSystem,
    signs: &SignTable,
    fr: &MatrixFrame,
) -> Result<Vec<IntMatrix>> {
    let rank = sys.rank();
    if rank != fr.rank {
        return Err(Error::MismatchedSystems);
    }
    let mut sigmas = Vec::with_capacity(rank);
    let mut sigma_invs = Vec::with_capacity(rank);
    for i in 0..rank {
        sigmas.push(sigma_matrix(&fr.e_pos[i], &fr.e_neg[i])?);
        sigma_invs.push(sigma_matrix(&fr.e_pos[i].scaled(-1), &fr.e_neg[i].scaled(-1))?);
    }
    let n = sys.n_roots();
    let mut out = vec![IntMatrix::zero(fr.dim); n];
    for lambda in 0..sys.n_pos() {
        let (base, letters) = sys.depth_chain(lambda);
        let c = i64::from(sys.c_simple(base));
        let mut k_pos = fr.e_pos[base].scaled(c);
        let mut k_neg = fr.e_neg[base].scaled(c);
        let mut cur = base;
        for &j in letters {
            let sign_pos = if signs.term(cur, j) == 1 { -1 } else { 1 };
            let sign_neg = if signs.term(sys.negate(cur), j) == 1 { -1 } else { 1 };
            k_pos = sigmas[j].mul(&k_pos).mul(&sigma_invs[j]).scaled(sign_pos);
            k_neg = sigmas[j].mul(&k_neg).mul(&sigma_invs[j]).scaled(sign_neg);
            cur = sys.reflect(j, cur);
        }
        if cur != lambda {
            return Err(Error::Internal(String::from("descent chain does not reach its root")));
        }
        for (idx, k) in [(lambda, &k_pos), (sys.negate(lambda), &k_neg)] {
            for j in 0..rank {
                if fr.h[j].commutator(k) != k.scaled(sys.pairing(idx, j)) {
                    return Err(Error::Internal(format!(
                        "replayed k for root {idx} is not in its root space"
                    )));
                }
            }
        }
        out[lambda] = k_pos;
        out[sys.negate(lambda)] = k_neg;
    }
    Ok(out)
}

/// Relative signs `k_λ = s·ref_λ` against the frame's reference vectors:
/// for λ > 0 the reference is the k-pattern with leading row-major entry
/// normalized to +1; for λ < 0 it is additionally oriented so that
/// `[ref_{−λ}, ref_λ]` is the coroot matrix of λ.
pub fn k_rel_frame_signs(
    sys: &RootSystem,
    signs: &SignTable,
    fr: &MatrixFrame,
) -> Result<Vec<i8>> {
    let k = k_basis_matrices(sys, signs, fr)?;
    let n = sys.n_roots();
    let mut rel = vec![0i8; n];
    for lambda in 0..sys.n_pos() {
        let (.., lead) = k[lambda]
            .leading_entry()
            .ok_or_else(|| Error::Internal(String::from("zero k matrix")))?;
        let s_pos = lead.signum();
        rel[lambda] = s_pos as i8;
        let ref_pos = k[lambda].scaled(s_pos);
        // Orient the negative reference by the sl2 relation.
        let neg = sys.negate(lambda);
        let (.., lead_n) = k[neg]
            .leading_entry()
            .ok_or_else(|| Error::Internal(String::from("zero k matrix")))?;
        let mut coroot_matrix = IntMatrix::zero(fr.dim);
        for (i, &cc) in sys.root(neg).coroot_coords.iter().enumerate() {
            coroot_matrix = coroot_matrix.plus(&fr.h[i].scaled(cc));
        }
        let cand = k[neg].scaled(lead_n.signum());
        let t = if ref_pos.commutator(&cand) == coroot_matrix {
            1
        } else if ref_pos.commutator(&cand.scaled(-1)) == coroot_matrix {
            -1
        } else {
            return Err(Error::Internal(String::from(
                "negative reference vector cannot be oriented",
            )));
        };
        // k_neg = lead_n.signum()·cand and ref_neg = t·cand.
        rel[neg] = (lead_n.signum() * i64::from(t)) as i8;
    }
    Ok(rel)
}

/// Outcome of the oracle sweep: how many identities were checked, and a
/// capped list of mismatch descriptions (empty on success).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub checked: usize,
    pub mismatches: Vec<String>,
}

const MISMATCH_CAP: usize = 16;

impl OracleReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn record(&mut self, msg: String) {
        if self.mismatches.len() < MISMATCH_CAP {
            self.mismatches.push(msg);
        }
    }
}

/// Checks every bracket of the invariant basis against literal matrix
/// commutators in the frame, working in the `𝔢`-model `𝔢_λ = γ(λ)·k_λ`:
/// `[𝔢_λ,𝔢_μ] = N_{λ,μ}𝔢_{λ+μ}` or the coroot matrix when μ = −λ,
/// `[h_i,𝔢_λ] = ⟨λ,α_i∨⟩𝔢_λ`, `[h_i,h_j] = 0`, and for the special linear
/// frame the involution model `θ(X) = −Xᵀ` against `𝔢_λ ↦ 𝔢_{−λ}`.
pub fn verify_against_oracle(
    sys: &RootSystem,
    signs: &SignTable,
    table: &StructureTable,
    fr: &MatrixFrame,
) -> Result<OracleReport> {
    let k = k_basis_matrices(sys, signs, fr)?;
    let n = sys.n_roots();
    let em: Vec<IntMatrix> =
        (0..n).map(|l| k[l].scaled(i64::from(signs.gamma(l)))).collect();
    let mut report = OracleReport { checked: 0, mismatches: Vec::new() };
    for l in 0..n {
        for m in 0..n {
            if l == m {
                continue;
            }
            let actual = em[l].commutator(&em[m]);
            let expected = if m == sys.negate(l) {
                let mut hm = IntMatrix::zero(fr.dim);
                for (i, &cc) in sys.root(m).coroot_coords.iter().enumerate() {
                    hm = hm.plus(&fr.h[i].scaled(cc));
                }
                hm
            } else if let Some(sum) = sys.sum_index(l, m) {
                em[sum].scaled(structure_constant(sys, table, l, m)?)
            } else {
                IntMatrix::zero(fr.dim)
            };
            report.checked += 1;
            if actual != expected {
                report.record(format!("commutator mismatch on root pair ({l},{m})"));
            }
        }
    }
    for i in 0..sys.rank() {
        for l in 0..n {
            report.checked += 1;
            if fr.h[i].commutator(&em[l]) != em[l].scaled(sys.pairing(l, i)) {
                report.record(format!("torus action mismatch on (h_{i}, root {l})"));
            }
        }
        for j in 0..sys.rank() {
            report.checked += 1;
            if !fr.h[i].commutator(&fr.h[j]).is_zero() {
                report.record(format!("nonzero torus commutator (h_{i}, h_{j})"));
            }
        }
    }
    if fr.frame_type == FrameType::SpecialLinear {
        for l in 0..n {
            report.checked += 1;
            if em[l].transpose().scaled(-1) != em[sys.negate(l)] {
                report.record(format!("involution mismatch on root {l}"));
            }
        }
    }
    Ok(report)
}
