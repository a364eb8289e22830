//! The Verlinde algebra: fusion and convolution products, the s-operators,
//! both Frobenius structures and genus-g dimension counts.

use std::fmt;

use nalgebra::DMatrix;

use crate::category::CategoryData;
use crate::report::{CheckResult, Report};
use crate::{c64, Error, Label, Result, C64};

/// An element `Σ c_i x_i` of the Verlinde algebra of a category.
#[derive(Clone, Debug)]
pub struct VerlindeElement<'a> {
    cat: &'a CategoryData,
    coeffs: Vec<C64>,
}

fn same_cat(a: &CategoryData, b: &CategoryData) -> bool {
    std::ptr::eq(a, b) || a == b
}

impl<'a> VerlindeElement<'a> {
    pub fn zero(cat: &'a CategoryData) -> Self {
        VerlindeElement { cat, coeffs: vec![C64::default(); cat.rank()] }
    }

    /// The basis element `x_i`.
    pub fn basis(cat: &'a CategoryData, i: Label) -> Self {
        let mut x = Self::zero(cat);
        x.coeffs[i] = c64(1.0, 0.0);
        x
    }

    pub fn from_coeffs(cat: &'a CategoryData, coeffs: Vec<C64>) -> Result<Self> {
        if coeffs.len() != cat.rank() {
            return Err(Error::Shape(format!(
                "element has {} coefficients, category has {} labels",
                coeffs.len(),
                cat.rank()
            )));
        }
        Ok(VerlindeElement { cat, coeffs })
    }

    pub fn cat(&self) -> &'a CategoryData {
        self.cat
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: Label) -> C64 {
        self.coeffs[i]
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_cat(self.cat, other.cat) {
            Ok(())
        } else {
            Err(Error::CategoryMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(VerlindeElement { cat: self.cat, coeffs })
    }

    pub fn scale(&self, k: C64) -> Self {
        VerlindeElement { cat: self.cat, coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// `x_i · x_j = Σ_k N_ij^k x_k`.
    pub fn fusion(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let r = self.cat.rank();
        let mut out = vec![C64::default(); r];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == C64::default() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                for k in self.cat.channels(i, j) {
                    out[k] += a * b * self.cat.n(i, j, k) as f64;
                }
            }
        }
        Ok(VerlindeElement { cat: self.cat, coeffs: out })
    }

    /// `x_i * x_j = δ_ij / d_i · x_i`.
    pub fn convolution(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = (0..self.cat.rank())
            .map(|i| self.coeffs[i] * other.coeffs[i] / self.cat.d(i))
            .collect();
        Ok(VerlindeElement { cat: self.cat, coeffs })
    }

    fn apply(&self, m: impl Fn(Label, Label) -> C64) -> Self {
        let r = self.cat.rank();
        let coeffs = (0..r).map(|j| (0..r).map(|i| self.coeffs[i] * m(i, j)).sum()).collect();
        VerlindeElement { cat: self.cat, coeffs }
    }

    /// `s(x_i) = Σ_j s_ij x_j`.
    pub fn s_op(&self) -> Self {
        self.apply(|i, j| self.cat.s(i, j))
    }

    pub fn sbar_op(&self) -> Self {
        self.apply(|i, j| self.cat.sbar(i, j))
    }

    /// Permutes coefficients by `i ↦ i*`.
    pub fn charge_conjugate(&self) -> Self {
        let mut coeffs = vec![C64::default(); self.cat.rank()];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[self.cat.dual(i)] = c;
        }
        VerlindeElement { cat: self.cat, coeffs }
    }

    /// Max-norm distance between coefficient vectors.
    pub fn distance(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

pub(crate) fn fmt_scalar(z: C64) -> String {
    let re = format!("{:.6}", z.re);
    if z.im.abs() < 5e-7 {
        trim(re)
    } else if z.re.abs() < 5e-7 {
        format!("{}i", trim(format!("{:.6}", z.im)))
    } else {
        format!("({}{:+.6}i)", trim(re), z.im)
    }
}

fn trim(s: String) -> String {
    if s.contains('.') {
        let t = s.trim_end_matches('0').trim_end_matches('.');
        if t == "-0" { "0".into() } else { t.to_string() }
    } else {
        s
    }
}

impl fmt::Display for VerlindeElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c.norm() < 5e-7 {
                continue;
            }
            let label = self.cat.label_name(i);
            let c = if c.im.abs() < 5e-7 && c.re < 0.0 {
                write!(f, "{}", if first { "-" } else { " - " })?;
                -c
            } else {
                if !first {
                    write!(f, " + ")?;
                }
                c
            };
            first = false;
            if (c - 1.0).norm() < 5e-7 {
                write!(f, "x_{label}")?;
            } else {
                write!(f, "{} x_{label}", fmt_scalar(c))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Product, unit, coproduct and counit of one of the two Frobenius
/// structures, as matrices over the `x_i` basis (columns are inputs,
/// tensor factors are ordered with the left factor slowest).
#[derive(Clone, Debug)]
pub struct FrobeniusMaps {
    pub variant: u8,
    /// `r × r²`
    pub product: DMatrix<C64>,
    /// `r × 1`
    pub unit: DMatrix<C64>,
    /// `r² × r`
    pub coproduct: DMatrix<C64>,
    /// `1 × r`
    pub counit: DMatrix<C64>,
}

pub fn frobenius_maps(cat: &CategoryData, variant: u8) -> Result<FrobeniusMaps> {
    let r = cat.rank();
    let one = c64(1.0, 0.0);
    let mut product = DMatrix::zeros(r, r * r);
    let mut coproduct = DMatrix::zeros(r * r, r);
    let (unit, counit) = match variant {
        1 => {
            for i in 0..r {
                product[(i, i * r + i)] = one / cat.d(i);
                coproduct[(i * r + i, i)] = one / cat.d(i);
            }
            (
                DMatrix::from_fn(r, 1, |i, _| cat.d(i)),
                DMatrix::from_fn(1, r, |_, i| cat.d(i)),
            )
        }
        2 => {
            for i in 0..r {
                for j in 0..r {
                    for k in 0..r {
                        product[(k, i * r + j)] = c64(cat.n(i, j, k) as f64, 0.0);
                    }
                }
            }
            // x_i ↦ Σ_b x_i x_b* ⊗ x_b
            for i in 0..r {
                for a in 0..r {
                    for b in 0..r {
                        coproduct[(a * r + b, i)] = c64(cat.n(i, cat.dual(b), a) as f64, 0.0);
                    }
                }
            }
            (
                DMatrix::from_fn(r, 1, |i, _| if i == 0 { one } else { C64::default() }),
                DMatrix::from_fn(1, r, |_, i| if i == 0 { one } else { C64::default() }),
            )
        }
        v => return Err(Error::InvalidVariant(v)),
    };
    Ok(FrobeniusMaps { variant, product, unit, coproduct, counit })
}

pub(crate) fn max_diff(a: &DMatrix<C64>, b: &DMatrix<C64>) -> f64 {
    if a.shape() != b.shape() {
        return f64::INFINITY;
    }
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

impl FrobeniusMaps {
    /// Associativity, coassociativity, both Frobenius relations and the
    /// (co)unit laws, as matrix identities.
    pub fn check_laws(&self, tol: f64) -> Report {
        let r = self.product.nrows();
        let id: DMatrix<C64> = DMatrix::identity(r, r);
        let (m, d, u, e) = (&self.product, &self.coproduct, &self.unit, &self.counit);
        let pairs: [(&str, DMatrix<C64>, DMatrix<C64>); 8] = [
            ("associativity", m * m.kronecker(&id), m * id.kronecker(m)),
            ("coassociativity", d.kronecker(&id) * d, id.kronecker(d) * d),
            ("frobenius left", d * m, id.kronecker(m) * d.kronecker(&id)),
            ("frobenius right", d * m, m.kronecker(&id) * id.kronecker(d)),
            ("left unit", m * u.kronecker(&id), id.clone()),
            ("right unit", m * id.kronecker(u), id.clone()),
            ("left counit", e.kronecker(&id) * d, id.clone()),
            ("right counit", id.kronecker(e) * d, id.clone()),
        ];
        let mut rep = Report::new();
        for (name, a, b) in pairs {
            rep.push(CheckResult::from_residuals(
                format!("variant {} {name}", self.variant),
                tol,
                [(vec![], max_diff(&a, &b))],
            ));
        }
        rep
    }
}

fn s_or_sbar<'a>(x: &VerlindeElement<'a>, bar: bool) -> VerlindeElement<'a> {
    if bar { x.sbar_op() } else { x.s_op() }
}

fn basis_pairs(r: usize) -> impl Iterator<Item = (Label, Label)> {
    (0..r).flat_map(move |i| (0..r).map(move |j| (i, j)))
}

/// Checks `s(x_i x_j) = s(x_i) * s(x_j)` and the s̄ analogue on all basis pairs.
pub fn verify_verlinde<'a>(cat: &'a CategoryData, tol: f64) -> Report {
    let r = cat.rank();
    let mut rep = Report::new();
    for bar in [false, true] {
        let op = |x: &VerlindeElement<'a>| s_or_sbar(x, bar);
        let name = if bar { "sbar(xy) = sbar(x)*sbar(y)" } else { "s(xy) = s(x)*s(y)" };
        rep.push(CheckResult::from_residuals(
            name,
            tol,
            basis_pairs(r).map(|(i, j)| {
                let (x, y) = (VerlindeElement::basis(cat, i), VerlindeElement::basis(cat, j));
                let lhs = op(&x.fusion(&y).unwrap());
                let rhs = op(&x).convolution(&op(&y)).unwrap();
                (vec![i, j], lhs.distance(&rhs))
            }),
        ));
    }
    rep
}

/// `𝔇 φ_J` with `φ_J = Σ_{j∈J} d_j x_j`.
pub fn transparent_element(cat: &CategoryData, tol: f64) -> VerlindeElement<'_> {
    let mut coeffs = vec![C64::default(); cat.rank()];
    for j in cat.transparent_objects(tol) {
        coeffs[j] = cat.global_dim() * cat.d(j);
    }
    VerlindeElement { cat, coeffs }
}

/// Checks `s((𝔇φ_J · x) * y) = s(x * (𝔇φ_J · y)) = s(x) · s(y)` and the s̄
/// analogue on all basis pairs.
pub fn verify_reverse<'a>(cat: &'a CategoryData, tol: f64) -> Report {
    let r = cat.rank();
    let xi = transparent_element(cat, tol);
    let mut rep = Report::new();
    for bar in [false, true] {
        let op = |x: &VerlindeElement<'a>| s_or_sbar(x, bar);
        let tag = if bar { "sbar" } else { "s" };
        for left in [true, false] {
            let name = if left {
                format!("{tag}((Dphi_J x) * y) = {tag}(x) {tag}(y)")
            } else {
                format!("{tag}(x * (Dphi_J y)) = {tag}(x) {tag}(y)")
            };
            rep.push(CheckResult::from_residuals(
                name,
                tol,
                basis_pairs(r).map(|(i, j)| {
                    let (x, y) = (VerlindeElement::basis(cat, i), VerlindeElement::basis(cat, j));
                    let inner = if left {
                        xi.fusion(&x).unwrap().convolution(&y).unwrap()
                    } else {
                        x.convolution(&xi.fusion(&y).unwrap()).unwrap()
                    };
                    let rhs = op(&x).fusion(&op(&y)).unwrap();
                    (vec![i, j], op(&inner).distance(&rhs))
                }),
            ));
        }
    }
    rep
}

/// `N_ij^k = Σ_l s_jl s_il (s⁻¹)_lk / s_0l`, indexed `[i][j][k]`.
pub fn fusion_from_s(cat: &CategoryData, tol: f64) -> Result<Vec<Vec<Vec<C64>>>> {
    let s = cat.s_matrix();
    let det = s.clone().determinant();
    if det.norm() <= tol {
        return Err(Error::SingularS { det: det.norm() });
    }
    let inv = s.clone().try_inverse().ok_or(Error::SingularS { det: det.norm() })?;
    let r = cat.rank();
    if let Some(l) = (0..r).find(|&l| s[(0, l)].norm() <= tol) {
        return Err(Error::ZeroSEntry { label: l });
    }
    Ok((0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    (0..r)
                        .map(|k| (0..r).map(|l| s[(j, l)] * s[(i, l)] * inv[(l, k)] / s[(0, l)]).sum())
                        .collect()
                })
                .collect()
        })
        .collect())
}

/// Rounds [`fusion_from_s`] to integers, failing if any entry is further than
/// `int_tol` from a non-negative integer.
pub fn fusion_from_s_rounded(cat: &CategoryData, tol: f64, int_tol: f64) -> Result<(Vec<Vec<Vec<u32>>>, f64)> {
    let raw = fusion_from_s(cat, tol)?;
    let mut worst: f64 = 0.0;
    let rounded = raw
        .iter()
        .map(|m| {
            m.iter()
                .map(|row| {
                    row.iter()
                        .map(|z| {
                            let n = z.re.round();
                            worst = worst.max((z - n).norm());
                            n.max(0.0) as u32
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    if worst > int_tol {
        return Err(Error::InvalidArgument(format!(
            "reconstructed fusion tensor is {worst:.3e} away from integers"
        )));
    }
    Ok((rounded, worst))
}

/// `√𝔇` as the positive real root; non-real 𝔇 is rejected.
pub fn sqrt_global_dim(cat: &CategoryData, tol: f64) -> Result<f64> {
    let dd = cat.global_dim();
    if dd.im.abs() > tol || dd.re <= 0.0 {
        return Err(Error::NonRealGlobalDim(dd));
    }
    Ok(dd.re.sqrt())
}

/// `Σ_p S_{i₁p}⋯S_{i_np} / S_{0p}^n · S_{0p}^{2-2g}` with `S = s/√𝔇`.
pub fn genus_dim_formula(cat: &CategoryData, g: u32, insertions: &[Label], tol: f64) -> Result<C64> {
    let root = sqrt_global_dim(cat, tol)?;
    let big_s = |i: Label, p: Label| cat.s(i, p) / root;
    let r = cat.rank();
    let mut total = C64::default();
    for p in 0..r {
        let s0 = big_s(0, p);
        if s0.norm() <= tol {
            return Err(Error::ZeroSEntry { label: p });
        }
        let mut term = s0.powi(2 - 2 * g as i32);
        for &i in insertions {
            term *= big_s(i, p) / s0;
        }
        total += term;
    }
    Ok(total)
}

const GENUS_GUARD: usize = 4096;

/// Coefficient of `x_0` in `(Σ_k x_k x_k*)^g · x_{i₁}⋯x_{i_n}`, in exact
/// integer arithmetic.
pub fn genus_dim_bruteforce(cat: &CategoryData, g: u32, insertions: &[Label]) -> Result<u128> {
    let r = cat.rank();
    if (g as usize + insertions.len()) * r > GENUS_GUARD {
        return Err(Error::SizeGuard(format!(
            "g={g} with {} insertions over {r} labels exceeds the guard",
            insertions.len()
        )));
    }
    let overflow = || Error::SizeGuard("coefficient overflowed u128".into());
    let mul = |x: &[u128], y: &[u128]| -> Result<Vec<u128>> {
        let mut out = vec![0u128; r];
        for (i, &a) in x.iter().enumerate().filter(|(_, a)| **a != 0) {
            for (j, &b) in y.iter().enumerate().filter(|(_, b)| **b != 0) {
                for k in cat.channels(i, j) {
                    let t = a
                        .checked_mul(b)
                        .and_then(|t| t.checked_mul(cat.n(i, j, k) as u128))
                        .ok_or_else(overflow)?;
                    out[k] = out[k].checked_add(t).ok_or_else(overflow)?;
                }
            }
        }
        Ok(out)
    };
    let basis = |i: Label| {
        let mut v = vec![0u128; r];
        v[i] = 1;
        v
    };
    let mut handle = vec![0u128; r];
    for k in 0..r {
        handle = mul(&basis(k), &basis(cat.dual(k)))?
            .iter()
            .zip(&handle)
            .map(|(a, b)| a + b)
            .collect();
    }
    let mut acc = basis(0);
    for &i in insertions {
        if i >= r {
            return Err(Error::InvalidArgument(format!("label {i} out of range")));
        }
        acc = mul(&acc, &basis(i))?;
    }
    for _ in 0..g {
        acc = mul(&acc, &handle)?;
    }
    Ok(acc[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::load_builtin;
    use crate::DEFAULT_TOL;
    use std::collections::BTreeMap;

    fn cat(name: &str) -> CategoryData {
        load_builtin(name, &BTreeMap::new()).unwrap()
    }

    fn phi() -> f64 {
        (1.0 + 5f64.sqrt()) / 2.0
    }

    fn close(x: &VerlindeElement, want: &[f64]) -> bool {
        x.coeffs().iter().zip(want).all(|(a, b)| (a - b).norm() < 1e-12)
    }

    #[test]
    fn fusion_examples() {
        let fib = cat("fibonacci");
        let t = VerlindeElement::basis(&fib, 1);
        let one = VerlindeElement::basis(&fib, 0);
        assert!(close(&one.fusion(&t).unwrap(), &[0.0, 1.0]));
        assert!(close(&t.fusion(&t).unwrap(), &[1.0, 1.0]));
        let ising = cat("ising");
        let s = VerlindeElement::basis(&ising, 1);
        assert!(close(&s.fusion(&s).unwrap(), &[1.0, 0.0, 1.0]));
    }

    #[test]
    fn convolution_examples() {
        let fib = cat("fibonacci");
        let t = VerlindeElement::basis(&fib, 1);
        let one = VerlindeElement::basis(&fib, 0);
        assert!(close(&t.convolution(&t).unwrap(), &[0.0, 1.0 / phi()]));
        assert!(close(&one.convolution(&t).unwrap(), &[0.0, 0.0]));
        assert!(close(&one.convolution(&one).unwrap(), &[1.0, 0.0]));
    }

    #[test]
    fn category_mismatch() {
        let (a, b) = (cat("fibonacci"), cat("semion"));
        let x = VerlindeElement::basis(&a, 1);
        let y = VerlindeElement::basis(&b, 1);
        assert!(matches!(x.fusion(&y), Err(Error::CategoryMismatch)));
        assert!(matches!(x.convolution(&y), Err(Error::CategoryMismatch)));
    }

    #[test]
    fn s_operator_examples() {
        let triv = cat("trivial");
        assert!(close(&VerlindeElement::basis(&triv, 0).s_op(), &[1.0]));
        let fib = cat("fibonacci");
        assert!(close(&VerlindeElement::basis(&fib, 1).s_op(), &[phi(), -1.0]));
        let z2 = cat("rep_z2");
        assert!(close(&VerlindeElement::basis(&z2, 1).s_op(), &[1.0, 1.0]));
    }

    #[test]
    fn charge_conjugation() {
        let fib = cat("fibonacci");
        assert!(close(&VerlindeElement::basis(&fib, 1).charge_conjugate(), &[0.0, 1.0]));
        let mut p = BTreeMap::new();
        p.insert("n".to_string(), 3);
        p.insert("q".to_string(), 1);
        let z3 = load_builtin("cyclic", &p).unwrap();
        let w = z3.label_index("ω").unwrap();
        let w2 = z3.label_index("ω²").unwrap();
        let img = VerlindeElement::basis(&z3, w).charge_conjugate();
        assert_eq!(img.coeff(w2), c64(1.0, 0.0));
    }

    #[test]
    fn frobenius_examples() {
        let fib = cat("fibonacci");
        let v1 = frobenius_maps(&fib, 1).unwrap();
        assert!((v1.counit[(0, 1)] - phi()).norm() < 1e-12);
        assert!((v1.coproduct[(3, 1)] - 1.0 / phi()).norm() < 1e-12);
        assert_eq!(v1.coproduct.column(1).iter().filter(|z| z.norm() > 0.0).count(), 1);
        let v2 = frobenius_maps(&fib, 2).unwrap();
        assert_eq!(v2.unit[(0, 0)], c64(1.0, 0.0));
        assert_eq!(v2.unit[(1, 0)], c64(0.0, 0.0));
        assert!(matches!(frobenius_maps(&fib, 3), Err(Error::InvalidVariant(3))));
    }

    #[test]
    fn frobenius_laws_hold() {
        for name in ["trivial", "fibonacci", "ising", "semion", "rep_z2"] {
            let c = cat(name);
            for v in [1, 2] {
                let rep = frobenius_maps(&c, v).unwrap().check_laws(DEFAULT_TOL);
                assert!(rep.passed(), "{name} variant {v}: {rep}");
            }
        }
    }

    #[test]
    fn verlinde_suites() {
        for name in ["trivial", "fibonacci", "ising", "semion", "rep_z2"] {
            let c = cat(name);
            assert!(verify_verlinde(&c, DEFAULT_TOL).passed(), "{name}");
            assert!(verify_reverse(&c, DEFAULT_TOL).passed(), "{name}");
        }
        assert_eq!(verify_verlinde(&cat("trivial"), DEFAULT_TOL).max_residual(), 0.0);
    }

    #[test]
    fn familiar_form() {
        let fib = cat("fibonacci");
        let n = fusion_from_s(&fib, DEFAULT_TOL).unwrap();
        assert!((n[1][1][1] - 1.0).norm() < 1e-9);
        let triv = fusion_from_s(&cat("trivial"), DEFAULT_TOL).unwrap();
        assert!((triv[0][0][0] - 1.0).norm() < 1e-12);
        assert!(matches!(fusion_from_s(&cat("rep_z2"), DEFAULT_TOL), Err(Error::SingularS { .. })));
    }

    #[test]
    fn genus_examples() {
        let fib = cat("fibonacci");
        assert!((genus_dim_formula(&fib, 1, &[], DEFAULT_TOL).unwrap() - 2.0).norm() < 1e-9);
        assert!((genus_dim_formula(&fib, 2, &[], DEFAULT_TOL).unwrap() - 5.0).norm() < 1e-9);
        assert_eq!(genus_dim_bruteforce(&fib, 2, &[]).unwrap(), 5);
        let ising = cat("ising");
        assert_eq!(genus_dim_bruteforce(&ising, 1, &[2]).unwrap(), 1);
        assert!((genus_dim_formula(&ising, 1, &[2], DEFAULT_TOL).unwrap() - 1.0).norm() < 1e-9);
        for c in [&fib, &ising] {
            for i in 0..c.rank() {
                assert_eq!(genus_dim_bruteforce(c, 0, &[i]).unwrap(), u128::from(i == 0));
            }
        }
    }

    #[test]
    fn genus_formula_rejects_degenerate_input() {
        let mut raw = cat("fibonacci").to_raw();
        raw.d[1] = [0.0, 0.0];
        raw.s = None;
        let flat = CategoryData::from_raw(raw).unwrap();
        assert!(matches!(genus_dim_formula(&flat, 1, &[], DEFAULT_TOL), Err(Error::ZeroSEntry { label: 1 })));
        let mut raw = cat("fibonacci").to_raw();
        raw.d[1] = [0.0, 1.0];
        let odd = CategoryData::from_raw(raw).unwrap();
        assert!(matches!(genus_dim_formula(&odd, 1, &[], DEFAULT_TOL), Err(Error::NonRealGlobalDim(_))));
    }

    #[test]
    fn bruteforce_size_guard() {
        let fib = cat("fibonacci");
        assert!(matches!(genus_dim_bruteforce(&fib, 5000, &[]), Err(Error::SizeGuard(_))));
    }

    #[test]
    fn element_display() {
        let fib = cat("fibonacci");
        let x = VerlindeElement::basis(&fib, 1).s_op();
        assert_eq!(x.to_string(), "1.618034 x_1 - x_τ");
    }
}
