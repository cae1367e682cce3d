//! Exact f↔h transforms, the symmetric polynomial family `P_{d,i}`, the
//! basis `B_{d,i}`, generalized g-vector expansion, and the constructive
//! rewriting that expands `P_{d,i}` in `B_{d,i+1}` and `P_{d,i}·P_{d',i}` in
//! `B_{d+d'+1,i}` with nonnegative integer coefficients.

use serde::Serialize;

use crate::complex::FVector;
use crate::error::{Error, Result};

/// Dense integer-coefficient univariate polynomial, constant term first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    coeffs: Vec<i64>,
}

impl SymPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        SymPoly { coeffs }
    }

    pub fn zero() -> Self {
        SymPoly::new(vec![0])
    }

    pub fn one() -> Self {
        SymPoly::new(vec![1])
    }

    /// `1 + t + ... + t^k`.
    pub fn geometric(k: i64) -> Self {
        assert!(k >= 0);
        SymPoly::new(vec![1; (k + 1) as usize])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs == [0]
    }

    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        SymPoly::new(out)
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        SymPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        SymPoly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn scale(&self, c: i64) -> SymPoly {
        SymPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `t^c`.
    pub fn shift(&self, c: usize) -> SymPoly {
        let mut out = vec![0i64; c];
        out.extend_from_slice(&self.coeffs);
        SymPoly::new(out)
    }

    pub fn pow(&self, e: u32) -> SymPoly {
        let mut acc = SymPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Symmetry about `degree' m/2`: `c_k = c_{m-k}` for `0 <= k <= m`.
    pub fn is_symmetric(&self, m: usize) -> bool {
        if self.degree() > m {
            return false;
        }
        (0..=m).all(|k| self.coeff(k) == self.coeff(m - k))
    }
}

/// Unique `q >= 0, 1 <= r <= i` with `d + 1 = q·i + r` (for `d >= 0`).
pub fn qr_decompose(d: i64, i: i64) -> Result<(i64, i64)> {
    if i < 1 || d < 0 {
        return Err(Error::BadParams(format!("qr_decompose needs i >= 1, d >= 0; got d={d}, i={i}")));
    }
    let m = d + 1;
    let r = (m - 1) % i + 1;
    Ok(((m - r) / i, r))
}

/// `P_{d,i}(t) = (1+t+...+t^i)^q (1+t+...+t^r)`, with `P_{-1,i} = 1`.
pub fn p_poly(d: i64, i: i64) -> Result<SymPoly> {
    if d == -1 {
        if i < 1 {
            return Err(Error::BadParams(format!("p_poly needs i >= 1; got i={i}")));
        }
        return Ok(SymPoly::one());
    }
    let (q, r) = qr_decompose(d, i)?;
    Ok(SymPoly::geometric(i).pow(q as u32).mul(&SymPoly::geometric(r)))
}

/// The ordered basis `B_{d,i} = (P_{d,i}, t·P_{d-2,i}, ..., t^⌊(d+1)/2⌋·P_{d-2⌊(d+1)/2⌋,i})`.
pub fn basis_b(d: i64, i: i64) -> Result<Vec<SymPoly>> {
    if i < 1 || d < -1 {
        return Err(Error::BadParams(format!("basis_b needs i >= 1, d >= -1; got d={d}, i={i}")));
    }
    let top = (d + 1) / 2;
    (0..=top)
        .map(|j| Ok(p_poly(d - 2 * j, i)?.shift(j as usize)))
        .collect()
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1i64;
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// `(h_0, ..., h_{d+1})`, the binomial transform of an f-vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HVector(pub Vec<i64>);

impl HVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn polynomial(&self) -> SymPoly {
        SymPoly::new(self.0.clone())
    }

    /// Dehn–Sommerville symmetry `h_k = h_{d+1-k}`.
    pub fn is_symmetric(&self) -> bool {
        let m = self.0.len() - 1;
        (0..=m).all(|k| self.0[k] == self.0[m - k])
    }
}

/// `Σ h_k x^{d+1-k} = Σ f_{k-1} (x-1)^{d+1-k}`.
pub fn f_to_h(f: &FVector) -> HVector {
    let d = f.dim();
    let mut h = Vec::with_capacity((d + 2) as usize);
    for k in 0..=(d + 1) {
        let mut acc = 0i64;
        for j in 0..=k {
            let sign = if (k - j) % 2 == 0 { 1 } else { -1 };
            acc += sign * binomial(d + 1 - j, k - j) * f.f(j - 1);
        }
        h.push(acc);
    }
    HVector(h)
}

/// Inverse transform; round-trip with [`f_to_h`] is the identity.
pub fn h_to_f(h: &HVector) -> FVector {
    let d = h.0.len() as i64 - 2;
    let mut f = Vec::with_capacity((d + 2) as usize);
    for k in 0..=(d + 1) {
        let mut acc = 0i64;
        for j in 0..=k {
            acc += binomial(d + 1 - j, k - j) * h.0[j as usize];
        }
        f.push(acc);
    }
    FVector(f)
}

/// Coefficients of an h-polynomial in the basis `B_{d,i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GVector {
    pub d: i64,
    pub i: i64,
    pub entries: Vec<i64>,
}

/// Expand a symmetric polynomial of degree <= d+1 (axis (d+1)/2) in
/// `B_{d,i}`. Each basis element `t^j P_{d-2j,i}` has lowest term `t^j` with
/// coefficient 1, so the expansion is peeled off coefficient by coefficient.
pub fn g_expand(h: &SymPoly, d: i64, i: i64) -> Result<GVector> {
    if h.degree() as i64 > d + 1 {
        return Err(Error::DegreeTooHigh {
            deg: h.degree(),
            max: (d + 1) as usize,
        });
    }
    if !h.is_symmetric((d + 1) as usize) {
        return Err(Error::NotSymmetric(d + 1));
    }
    let basis = basis_b(d, i)?;
    let mut residual = h.clone();
    let mut entries = Vec::with_capacity(basis.len());
    for (j, b) in basis.iter().enumerate() {
        let g = residual.coeff(j);
        residual = residual.sub(&b.scale(g));
        entries.push(g);
    }
    assert!(
        residual.is_zero(),
        "symmetric polynomial failed to expand in B_{{{d},{i}}}"
    );
    Ok(GVector { d, i, entries })
}

/// h-vector convenience wrapper around [`g_expand`].
pub fn g_of_h(h: &HVector, i: i64) -> Result<GVector> {
    let d = h.0.len() as i64 - 2;
    g_expand(&h.polynomial(), d, i)
}

// ---- rewriting via (1+..+t^b)(1+..+t^a) = (1+..+t^{b-1})(1+..+t^{a+1}) + t^b(1+..+t^{a-b}) ----

/// A summand `t^c · Π (1+...+t^k)` in the rewriting worklist.
#[derive(Clone, Debug)]
struct Summand {
    shift: i64,
    factors: Vec<i64>, // descending
}

/// Rewrite the product of geometric factors until every summand has all
/// factors of degree `cap` except at most one smaller; returns coefficients
/// indexed by the summand shift `c`. Never subtracts, so all results are
/// nonnegative by construction.
fn rewrite(initial: Vec<i64>, cap: i64, n_coeffs: usize) -> Vec<i64> {
    let mut out = vec![0i64; n_coeffs];
    let mut work: Vec<Summand> = vec![Summand {
        shift: 0,
        factors: {
            let mut f = initial;
            f.retain(|&x| x > 0);
            f.sort_unstable_by(|a, b| b.cmp(a));
            f
        },
    }];
    while let Some(s) = work.pop() {
        let small: Vec<usize> = (0..s.factors.len()).filter(|&k| s.factors[k] < cap).collect();
        if small.len() < 2 {
            out[s.shift as usize] += 1;
            continue;
        }
        // pair the two largest sub-cap factors: a >= b
        let a = s.factors[small[0]];
        let b = s.factors[small[1]];
        let mut rest: Vec<i64> = s.factors.clone();
        rest.remove(small[1]);
        rest.remove(small[0]);
        let mut first = rest.clone();
        first.push(a + 1);
        if b - 1 > 0 {
            first.push(b - 1);
        }
        first.sort_unstable_by(|x, y| y.cmp(x));
        work.push(Summand {
            shift: s.shift,
            factors: first,
        });
        let mut second = rest;
        if a - b > 0 {
            second.push(a - b);
        }
        second.sort_unstable_by(|x, y| y.cmp(x));
        work.push(Summand {
            shift: s.shift + b,
            factors: second,
        });
    }
    out
}

/// Nonnegative integer coefficients of `P_{d,i}` in the basis `B_{d,i+1}`.
/// The reconstruction is checked exactly before returning.
pub fn hierarchy_expand(d: i64, i: i64) -> Result<Vec<i64>> {
    if i < 1 || d < 0 {
        return Err(Error::BadParams(format!("hierarchy_expand needs i >= 1, d >= 0; got d={d}, i={i}")));
    }
    let (q, r) = qr_decompose(d, i)?;
    let mut factors = vec![i; q as usize];
    factors.push(r);
    let n = ((d + 1) / 2 + 1) as usize;
    let coeffs = rewrite(factors, i + 1, n);
    let target = p_poly(d, i)?;
    let recon = reconstruct(&coeffs, d, i + 1)?;
    assert_eq!(recon, target, "hierarchy_expand reconstruction failed at d={d}, i={i}");
    Ok(coeffs)
}

/// Nonnegative integer coefficients of `P_{d,i}·P_{d',i}` in `B_{d+d'+1,i}`.
pub fn join_expand(d: i64, d2: i64, i: i64) -> Result<Vec<i64>> {
    if i < 1 || d < 0 || d2 < 0 {
        return Err(Error::BadParams(format!("join_expand needs i >= 1, d, d' >= 0; got d={d}, d'={d2}, i={i}")));
    }
    let (q, r) = qr_decompose(d, i)?;
    let (q2, r2) = qr_decompose(d2, i)?;
    let big = d + d2 + 1;
    let mut factors = vec![i; (q + q2) as usize];
    factors.push(r);
    factors.push(r2);
    let n = ((big + 1) / 2 + 1) as usize;
    let coeffs = rewrite(factors, i, n);
    let target = p_poly(d, i)?.mul(&p_poly(d2, i)?);
    let recon = reconstruct(&coeffs, big, i)?;
    assert_eq!(recon, target, "join_expand reconstruction failed at d={d}, d'={d2}, i={i}");
    Ok(coeffs)
}

fn reconstruct(coeffs: &[i64], d: i64, i: i64) -> Result<SymPoly> {
    let basis = basis_b(d, i)?;
    let mut acc = SymPoly::zero();
    for (j, b) in basis.iter().enumerate() {
        acc = acc.add(&b.scale(coeffs[j]));
    }
    Ok(acc)
}
