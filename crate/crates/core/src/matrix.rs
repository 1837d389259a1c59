//! The semidirect product `Zⁿ ⋊_M Z` with exact integer arithmetic.
//!
//! An element `(v, k)` multiplies as `(a.v + M^{a.k}·b.v, a.k + b.k)`. It is
//! the affine matrix `[[M^k, v], [0, 1]]`, so the group is linear over the
//! integers and polycyclic.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::format::{parse_int, parse_usize, strict_lines, FormatError};
use crate::group::{Group, GroupError, Result};

/// A square integer matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![BigInt::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = BigInt::one();
        }
        IntMatrix { n, data }
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(GroupError::Dimension { expected: n, found: r.len() });
            }
            data.extend(r.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix { n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.data.chunks(self.n.max(1))
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.n;
        let mut data = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        IntMatrix { n, data }
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.rows()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                match ((k + 1)..n).find(|&r| !m[r * n + k].is_zero()) {
                    Some(r) => {
                        for j in 0..n {
                            m.swap(k * n + j, r * n + j);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let v = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                    m[i * n + j] = v / &prev;
                }
            }
            prev = m[k * n + k].clone();
        }
        sign * &m[n * n - 1]
    }

    /// Inverse of a unimodular matrix, via the adjugate.
    pub fn inverse(&self) -> Result<IntMatrix> {
        let det = self.det();
        if det.abs() != BigInt::one() {
            return Err(GroupError::NotUnimodular);
        }
        let n = self.n;
        if n == 1 {
            return Ok(IntMatrix { n, data: vec![det] });
        }
        let mut data = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor(i, j).det();
                let cof = if (i + j) % 2 == 0 { minor } else { -minor };
                // adjugate is the transposed cofactor matrix; det = ±1
                data[j * n + i] = cof * &det;
            }
        }
        Ok(IntMatrix { n, data })
    }

    fn minor(&self, row: usize, col: usize) -> IntMatrix {
        let n = self.n;
        let data = (0..n)
            .filter(|&i| i != row)
            .flat_map(|i| (0..n).filter(move |&j| j != col).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        IntMatrix { n: n - 1, data }
    }

    /// Characteristic polynomial `det(xI − A)` by Faddeev–LeVerrier,
    /// coefficients from `x^n` down to the constant term.
    pub fn char_poly(&self) -> Vec<BigInt> {
        let n = self.n;
        let mut coeffs = vec![BigInt::one()];
        let mut m = IntMatrix { n, data: vec![BigInt::zero(); n * n] };
        for k in 1..=n {
            // M_k = A·M_{k−1} + c_{k−1}·I
            m = self.mul(&m);
            for i in 0..n {
                m.data[i * n + i] += &coeffs[k - 1];
            }
            let am = self.mul(&m);
            let trace: BigInt = (0..n).map(|i| am.get(i, i)).sum();
            coeffs.push(-trace / BigInt::from(k));
        }
        coeffs
    }
}

/// `M^k` by square-and-multiply; negative `k` needs a unimodular `M`.
pub fn mat_pow_matrix(m: &IntMatrix, k: &BigInt) -> Result<IntMatrix> {
    let base = if k.is_negative() { m.inverse()? } else { m.clone() };
    let k = k.abs();
    let mut acc = IntMatrix::identity(m.dim());
    for i in (0..k.bits()).rev() {
        acc = acc.mul(&acc);
        if k.bit(i) {
            acc = acc.mul(&base);
        }
    }
    Ok(acc)
}

/// `(v, k)`: translation part and exponent of the acting generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatElement {
    pub v: Vec<BigInt>,
    pub k: BigInt,
}

impl MatElement {
    pub fn new<T: Into<BigInt>>(v: impl IntoIterator<Item = T>, k: impl Into<BigInt>) -> Self {
        MatElement {
            v: v.into_iter().map(Into::into).collect(),
            k: k.into(),
        }
    }
}

/// `Zⁿ ⋊_M Z` for a unimodular `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatGroup {
    m: IntMatrix,
    m_inv: IntMatrix,
}

impl MatGroup {
    pub fn new(m: IntMatrix) -> Result<Self> {
        let m_inv = m.inverse()?;
        Ok(MatGroup { m, m_inv })
    }

    /// `M = [[2,1],[1,1]]`, a hyperbolic automorphism of `Z²`.
    pub fn anosov() -> Self {
        MatGroup::new(IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]).unwrap()).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.m.dim()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.m
    }

    fn power(&self, k: &BigInt) -> IntMatrix {
        if k.is_negative() {
            mat_pow_matrix(&self.m_inv, &-k).expect("non-negative exponent")
        } else {
            mat_pow_matrix(&self.m, k).expect("non-negative exponent")
        }
    }

    fn check(&self, a: &MatElement) -> Result<()> {
        if a.v.len() != self.dim() {
            return Err(GroupError::Dimension { expected: self.dim(), found: a.v.len() });
        }
        Ok(())
    }

    /// The faithful affine representation `[[M^k, v], [0, 1]]`.
    pub fn affine(&self, a: &MatElement) -> IntMatrix {
        let n = self.dim();
        let mk = self.power(&a.k);
        let mut data = Vec::with_capacity((n + 1) * (n + 1));
        for (i, row) in mk.rows().enumerate() {
            data.extend(row.iter().cloned());
            data.push(a.v[i].clone());
        }
        data.extend(std::iter::repeat_n(BigInt::zero(), n));
        data.push(BigInt::one());
        IntMatrix { n: n + 1, data }
    }

    /// Characteristic polynomial of the affine image: a conjugacy invariant
    /// used as a test heuristic only.
    pub fn conjugacy_invariant(&self, a: &MatElement) -> Vec<BigInt> {
        self.affine(a).char_poly()
    }
}

impl Group for MatGroup {
    type Elem = MatElement;

    fn identity(&self) -> MatElement {
        MatElement {
            v: vec![BigInt::zero(); self.dim()],
            k: BigInt::zero(),
        }
    }

    /// `e_1, …, e_n` in the fibre, then the acting generator `(0, 1)`.
    fn generators(&self) -> Vec<MatElement> {
        let n = self.dim();
        let mut gens: Vec<MatElement> = (0..n)
            .map(|i| {
                let mut v = vec![BigInt::zero(); n];
                v[i] = BigInt::one();
                MatElement { v, k: BigInt::zero() }
            })
            .collect();
        gens.push(MatElement {
            v: vec![BigInt::zero(); n],
            k: BigInt::one(),
        });
        gens
    }

    fn gen_count(&self) -> usize {
        self.dim() + 1
    }

    fn mul(&self, a: &MatElement, b: &MatElement) -> Result<MatElement> {
        self.check(a)?;
        self.check(b)?;
        let moved = if a.k.is_zero() { b.v.clone() } else { self.power(&a.k).mul_vec(&b.v) };
        Ok(MatElement {
            v: a.v.iter().zip(moved).map(|(x, y)| x + y).collect(),
            k: &a.k + &b.k,
        })
    }

    fn inv(&self, a: &MatElement) -> Result<MatElement> {
        self.check(a)?;
        let k = -&a.k;
        let moved = self.power(&k).mul_vec(&a.v);
        Ok(MatElement {
            v: moved.into_iter().map(|x| -x).collect(),
            k,
        })
    }

    fn encode(&self, a: &MatElement) -> String {
        let mut s = String::from("mat");
        for x in &a.v {
            s.push(' ');
            s.push_str(&x.to_string());
        }
        s.push_str(" ; ");
        s.push_str(&a.k.to_string());
        s
    }

    fn decode(&self, s: &str) -> Result<MatElement> {
        let bad = || GroupError::from(FormatError::new(format!("expected `mat <v..> ; <k>`, found `{s}`")));
        let body = s.strip_prefix("mat ").ok_or_else(bad)?;
        let (vs, k) = body.rsplit_once(" ; ").ok_or_else(bad)?;
        let v = vs.split(' ').map(parse_int).collect::<Result<Vec<_>, _>>()?;
        let a = MatElement { v, k: parse_int(k)? };
        self.check(&a)?;
        Ok(a)
    }
}

/// Descriptor: `matgroup n=<n>` followed by `n` rows of `n` integers.
impl FromStr for MatGroup {
    type Err = GroupError;

    fn from_str(text: &str) -> Result<Self> {
        let lines = strict_lines(text)?;
        let n = lines
            .first()
            .and_then(|l| l.strip_prefix("matgroup n="))
            .ok_or_else(|| FormatError::new("expected `matgroup n=<n>`"))?;
        let n = parse_usize(n)?;
        if n == 0 || lines.len() != n + 1 {
            return Err(FormatError::new(format!("expected {n} matrix rows")).into());
        }
        let rows = lines[1..]
            .iter()
            .map(|l| l.split(' ').map(parse_int).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        MatGroup::new(IntMatrix::from_rows(&rows)?)
    }
}

impl fmt::Display for MatGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "matgroup n={}", self.dim())?;
        for row in self.m.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
