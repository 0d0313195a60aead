//! The Van Loan rearrangement between operators on matrix space and their
//! reshaped representatives, plus Kronecker-sum assembly, application, and
//! the contraction adjoints used by the alternating solver.
//!
//! An operator `T` of size mn x mn is viewed as an m x m grid of n x n
//! blocks `T_{mu,nu}`. The rearranged matrix `That` of size m^2 x n^2 has
//! `vec(T_{mu,nu})ᵀ` as its row `mu + nu*m` (0-based, column-major over the
//! block grid). Kronecker sums map to sums of rank-one matrices:
//! `rearrange(kron(A,B)) = vec(A) vec(B)ᵀ`. The map is a Frobenius isometry
//! since it only permutes entries.

use crate::error::{Error, Result};
use crate::linalg::{kron_add_into, matricize, vectorize, DMat};

/// Rank-k Kronecker representation `{(A_j, B_j)}` of an operator on m x n
/// matrices: the assembled form is `sum_j kron(A_j, B_j)`, the action is
/// `X -> sum_j A_j X B_jᵀ`.
#[derive(Debug, Clone, PartialEq)]
pub struct KronSum {
    m: usize,
    n: usize,
    factors: Vec<(DMat, DMat)>,
}

impl KronSum {
    pub fn new(m: usize, n: usize, factors: Vec<(DMat, DMat)>) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Argument("KronSum: dimensions must be positive".into()));
        }
        if factors.is_empty() {
            return Err(Error::Argument("KronSum: at least one factor pair required".into()));
        }
        for (j, (a, b)) in factors.iter().enumerate() {
            if a.shape() != (m, m) {
                return Err(Error::Size(format!(
                    "KronSum: A_{} is {}x{}, expected {m}x{m}",
                    j + 1,
                    a.nrows(),
                    a.ncols()
                )));
            }
            if b.shape() != (n, n) {
                return Err(Error::Size(format!(
                    "KronSum: B_{} is {}x{}, expected {n}x{n}",
                    j + 1,
                    b.nrows(),
                    b.ncols()
                )));
            }
        }
        Ok(KronSum { m, n, factors })
    }

    /// All-zero factors, useful as a driver starting point.
    pub fn zeros(m: usize, n: usize, k: usize) -> Result<Self> {
        KronSum::new(m, n, (0..k).map(|_| (DMat::zeros(m, m), DMat::zeros(n, n))).collect())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[(DMat, DMat)] {
        &self.factors
    }

    pub fn factors_mut(&mut self) -> &mut [(DMat, DMat)] {
        &mut self.factors
    }

    pub fn into_factors(self) -> Vec<(DMat, DMat)> {
        self.factors
    }

    pub fn push_zero_pair(&mut self) {
        self.factors.push((DMat::zeros(self.m, self.m), DMat::zeros(self.n, self.n)));
    }

    /// `sum_j kron(A_j, B_j)` as a dense mn x mn matrix.
    pub fn assemble(&self) -> Result<DMat> {
        let mn = self
            .m
            .checked_mul(self.n)
            .ok_or_else(|| Error::Size("KronSum: mn overflows".into()))?;
        mn.checked_mul(mn)
            .ok_or_else(|| Error::Size("KronSum: mn*mn overflows".into()))?;
        let mut out = DMat::zeros(mn, mn);
        for (a, b) in &self.factors {
            kron_add_into(&mut out, 1.0, a, b);
        }
        Ok(out)
    }

    /// Operator action `sum_j A_j X B_jᵀ` on an m x n matrix.
    pub fn apply(&self, x: &DMat) -> Result<DMat> {
        if x.shape() != (self.m, self.n) {
            return Err(Error::Size(format!(
                "KronSum::apply: X is {}x{}, expected {}x{}",
                x.nrows(),
                x.ncols(),
                self.m,
                self.n
            )));
        }
        let mut out = DMat::zeros(self.m, self.n);
        for (a, b) in &self.factors {
            out += a * x * b.transpose();
        }
        Ok(out)
    }

    /// Expanded operator product `self . other`: if `self = sum_J C_J (x) D_J`
    /// and `other = sum_j A_j (x) B_j`, the result has one pair
    /// `(C_J A_j, D_J B_j)` per (J, j).
    pub fn operator_product(&self, other: &KronSum) -> Result<KronSum> {
        if self.m != other.m || self.n != other.n {
            return Err(Error::Size(format!(
                "operator_product: {}x{} factors vs {}x{}",
                self.m, self.n, other.m, other.n
            )));
        }
        let mut factors = Vec::with_capacity(self.k() * other.k());
        for (c, d) in &self.factors {
            for (a, b) in &other.factors {
                factors.push((c * a, d * b));
            }
        }
        KronSum::new(self.m, self.n, factors)
    }

    /// `sum_j lambda ||A_j||_F^2` style regularization helpers.
    pub fn frob_sq_a(&self) -> f64 {
        self.factors.iter().map(|(a, _)| a.norm_squared()).sum()
    }

    pub fn frob_sq_b(&self) -> f64 {
        self.factors.iter().map(|(_, b)| b.norm_squared()).sum()
    }
}

fn expect_operator_dims(t: &DMat, m: usize, n: usize, what: &str) -> Result<usize> {
    let mn = m
        .checked_mul(n)
        .ok_or_else(|| Error::Size(format!("{what}: mn overflows")))?;
    if t.shape() != (mn, mn) {
        return Err(Error::Size(format!(
            "{what}: matrix is {}x{}, expected {mn}x{mn} for m={m}, n={n}",
            t.nrows(),
            t.ncols()
        )));
    }
    Ok(mn)
}

/// Rearrange an mn x mn operator into its m^2 x n^2 representative.
pub fn rearrange(t: &DMat, m: usize, n: usize) -> Result<DMat> {
    expect_operator_dims(t, m, n, "rearrange")?;
    let mut out = DMat::zeros(m * m, n * n);
    for nu in 0..m {
        for mu in 0..m {
            let row = mu + nu * m;
            for c in 0..n {
                for r in 0..n {
                    out[(row, c * n + r)] = t[(mu * n + r, nu * n + c)];
                }
            }
        }
    }
    Ok(out)
}

/// Inverse rearrangement; `rearrange(rearrange_inverse(That)) == That` bit-exactly.
pub fn rearrange_inverse(that: &DMat, m: usize, n: usize) -> Result<DMat> {
    if that.shape() != (m * m, n * n) {
        return Err(Error::Size(format!(
            "rearrange_inverse: matrix is {}x{}, expected {}x{}",
            that.nrows(),
            that.ncols(),
            m * m,
            n * n
        )));
    }
    let mut out = DMat::zeros(m * n, m * n);
    for nu in 0..m {
        for mu in 0..m {
            let row = mu + nu * m;
            for c in 0..n {
                for r in 0..n {
                    out[(mu * n + r, nu * n + c)] = that[(row, c * n + r)];
                }
            }
        }
    }
    Ok(out)
}

/// Adjoint contraction against a fixed right factor:
/// `contract_b(Y, B) = unvec(rearrange(Y) vec(B))` is the m x m matrix with
/// `<contract_b(Y, B), A> = <Y, kron(A, B)>` for every A.
pub fn contract_b(y: &DMat, b: &DMat) -> Result<DMat> {
    let n = b.nrows();
    if b.ncols() != n {
        return Err(Error::Size("contract_b: B must be square".into()));
    }
    if n == 0 || y.nrows() % n != 0 {
        return Err(Error::Size(format!(
            "contract_b: Y has {} rows, not a multiple of n={n}",
            y.nrows()
        )));
    }
    let m = y.nrows() / n;
    let y_hat = rearrange(y, m, n)?;
    contract_b_hat(&y_hat, b, m)
}

/// Adjoint contraction against a fixed left factor:
/// `contract_a(Y, A) = unvec(rearrange(Y)ᵀ vec(A))` is the n x n matrix with
/// `<contract_a(Y, A), B> = <Y, kron(A, B)>` for every B.
pub fn contract_a(y: &DMat, a: &DMat) -> Result<DMat> {
    let m = a.nrows();
    if a.ncols() != m {
        return Err(Error::Size("contract_a: A must be square".into()));
    }
    if m == 0 || y.nrows() % m != 0 {
        return Err(Error::Size(format!(
            "contract_a: Y has {} rows, not a multiple of m={m}",
            y.nrows()
        )));
    }
    let n = y.nrows() / m;
    let y_hat = rearrange(y, m, n)?;
    contract_a_hat(&y_hat, a, n)
}

/// Contraction given a precomputed rearrangement (the solver reuses one
/// rearrange per dual iterate across all k factor terms).
pub(crate) fn contract_b_hat(y_hat: &DMat, b: &DMat, m: usize) -> Result<DMat> {
    let w = y_hat * vectorize(b);
    matricize(&w, m, m)
}

pub(crate) fn contract_a_hat(y_hat: &DMat, a: &DMat, n: usize) -> Result<DMat> {
    let w = y_hat.transpose() * vectorize(a);
    matricize(&w, n, n)
}
