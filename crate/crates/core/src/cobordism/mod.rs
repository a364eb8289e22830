//! Cornered-cobordism words on solid tori, evaluated to linear maps between
//! tensor powers of the Verlinde algebra.

mod parse;

use std::fmt;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use parse::{parse, Expr, Generator, ParseError, ParseErrorKind};

use crate::category::CategoryData;
use crate::report::{CheckResult, Report};
use crate::verlinde::{frobenius_maps, max_diff, transparent_element};
use crate::{c64, Error, Label, Result, C64, DEFAULT_TOL};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ArityError {
    #[error("arity mismatch at position {pos}: left side takes {needs} input(s) but right side produces {got}")]
    Compose { pos: usize, needs: usize, got: usize },
    #[error("signatures differ: {lhs:?} vs {rhs:?}")]
    Signature { lhs: (usize, usize), rhs: (usize, usize) },
}

/// `(inputs, outputs)` of a word, or the first Compose node that does not fit.
pub fn typecheck(e: &Expr) -> std::result::Result<(usize, usize), ArityError> {
    match e {
        Expr::Gen { gen, .. } => Ok(gen.arity()),
        Expr::Tensor { f, g, .. } => {
            let (a, b) = (typecheck(f)?, typecheck(g)?);
            Ok((a.0 + b.0, a.1 + b.1))
        }
        Expr::Compose { f, g, pos } => {
            let (a, b) = (typecheck(f)?, typecheck(g)?);
            if a.0 != b.1 {
                return Err(ArityError::Compose { pos: *pos, needs: a.0, got: b.1 });
            }
            Ok((b.0, a.1))
        }
    }
}

/// Generator matrices for one category, built once.
#[derive(Clone, Debug)]
pub struct Evaluator {
    rank: usize,
    global_dim: C64,
    table: Vec<(Generator, DMatrix<C64>)>,
}

impl Evaluator {
    pub fn new(cat: &CategoryData, tol: f64) -> Evaluator {
        let r = cat.rank();
        let one = c64(1.0, 0.0);
        let f1 = frobenius_maps(cat, 1).expect("variant 1");
        let f2 = frobenius_maps(cat, 2).expect("variant 2");
        let xi = transparent_element(cat, tol);
        // K(x_i) = 𝔇φ_J · x_i
        let k = DMatrix::from_fn(r, r, |c, i| {
            (0..r).map(|j| xi.coeff(j) * cat.n(j, i, c) as f64).sum::<C64>()
        });
        let mut p = DMatrix::zeros(r * r, r * r);
        for a in 0..r {
            for b in 0..r {
                p[(b * r + a, a * r + b)] = one;
            }
        }
        let table = vec![
            (Generator::Y1, f1.product),
            (Generator::Y2, f2.product),
            (Generator::CoY1, f1.coproduct),
            (Generator::CoY2, f2.coproduct),
            (Generator::I1, f1.unit),
            (Generator::I2, f2.unit),
            (Generator::Ci1, f1.counit),
            (Generator::Ci2, f2.counit),
            (Generator::Psi, cat.s_matrix().clone()),
            (Generator::PsiBar, cat.sbar_matrix()),
            (Generator::K, k),
            (Generator::P, p),
            (Generator::Id, DMatrix::identity(r, r)),
        ];
        Evaluator { rank: r, global_dim: cat.global_dim(), table }
    }

    pub fn generator(&self, g: Generator) -> &DMatrix<C64> {
        &self.table.iter().find(|(h, _)| *h == g).expect("every generator is tabulated").1
    }

    fn eval_unchecked(&self, e: &Expr) -> DMatrix<C64> {
        match e {
            Expr::Gen { gen, .. } => self.generator(*gen).clone(),
            Expr::Compose { f, g, .. } => self.eval_unchecked(f) * self.eval_unchecked(g),
            Expr::Tensor { f, g, .. } => self.eval_unchecked(f).kronecker(&self.eval_unchecked(g)),
        }
    }

    pub fn eval(&self, e: &Expr) -> Result<EvaluatedMap> {
        let (inputs, outputs) = typecheck(e)?;
        Ok(EvaluatedMap { rank: self.rank, inputs, outputs, matrix: self.eval_unchecked(e) })
    }

    pub fn eval_str(&self, text: &str) -> Result<EvaluatedMap> {
        self.eval(&parse(text)?)
    }

    pub fn global_dim(&self) -> C64 {
        self.global_dim
    }

    /// Residual of `lhs` against `factor · rhs`.
    pub fn check_scaled(&self, name: &str, lhs: &str, rhs: &str, factor: C64, tol: f64) -> Result<CheckResult> {
        let (a, b) = (self.eval_str(lhs)?, self.eval_str(rhs)?);
        if (a.inputs, a.outputs) != (b.inputs, b.outputs) {
            return Err(ArityError::Signature { lhs: (a.inputs, a.outputs), rhs: (b.inputs, b.outputs) }.into());
        }
        let scaled = b.matrix.map(|z| z * factor);
        Ok(CheckResult::from_residuals(name, tol, [(vec![], max_diff(&a.matrix, &scaled))]))
    }
}

/// Evaluates with the default tolerance for the transparent set.
pub fn evaluate(e: &Expr, cat: &CategoryData) -> Result<EvaluatedMap> {
    Evaluator::new(cat, DEFAULT_TOL).eval(e)
}

/// Max-entry residual between the two words.
pub fn check_equal(lhs: &str, rhs: &str, cat: &CategoryData, tol: f64) -> Result<CheckResult> {
    Evaluator::new(cat, tol).check_scaled(&format!("{lhs} = {rhs}"), lhs, rhs, c64(1.0, 0.0), tol)
}

/// Matrix of shape `rank^outputs × rank^inputs`.
#[derive(Clone, Debug, PartialEq)]
pub struct EvaluatedMap {
    pub rank: usize,
    pub inputs: usize,
    pub outputs: usize,
    pub matrix: DMatrix<C64>,
}

#[derive(Serialize, Deserialize)]
struct MapDoc {
    rank: usize,
    inputs: usize,
    outputs: usize,
    matrix: Vec<Vec<[f64; 2]>>,
}

impl EvaluatedMap {
    /// Image of `e_{c₁} ⊗ ⋯ ⊗ e_{c_m}`.
    pub fn apply_labels(&self, labels: &[Label]) -> Result<DVector<C64>> {
        if labels.len() != self.inputs {
            return Err(Error::InvalidArgument(format!(
                "map takes {} input(s), got {} label(s)",
                self.inputs,
                labels.len()
            )));
        }
        if let Some(&bad) = labels.iter().find(|&&l| l >= self.rank) {
            return Err(Error::InvalidArgument(format!("label {bad} out of range")));
        }
        let col = labels.iter().fold(0, |acc, &l| acc * self.rank + l);
        Ok(self.matrix.column(col).into_owned())
    }

    /// Labels of the tensor-basis vector at `index` (left factor slowest).
    pub fn basis_labels(&self, mut index: usize, count: usize) -> Vec<Label> {
        let mut out = vec![0; count];
        for slot in out.iter_mut().rev() {
            *slot = index % self.rank;
            index /= self.rank;
        }
        out
    }

    pub fn to_json(&self) -> String {
        let doc = MapDoc {
            rank: self.rank,
            inputs: self.inputs,
            outputs: self.outputs,
            matrix: self
                .matrix
                .row_iter()
                .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
                .collect(),
        };
        serde_json::to_string(&doc).expect("map serializes")
    }

    pub fn from_json(text: &str) -> Result<EvaluatedMap> {
        let doc: MapDoc = serde_json::from_str(text)?;
        let rows = doc.rank.pow(doc.outputs as u32);
        let cols = doc.rank.pow(doc.inputs as u32);
        if doc.matrix.len() != rows || doc.matrix.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape(format!("matrix must be {rows}x{cols}")));
        }
        Ok(EvaluatedMap {
            rank: doc.rank,
            inputs: doc.inputs,
            outputs: doc.outputs,
            matrix: DMatrix::from_fn(rows, cols, |i, j| c64(doc.matrix[i][j][0], doc.matrix[i][j][1])),
        })
    }

    /// One line per entry: `row,col,re,im`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["row", "col", "re", "im"]).expect("in-memory write");
        for i in 0..self.matrix.nrows() {
            for j in 0..self.matrix.ncols() {
                let z = self.matrix[(i, j)];
                w.serialize((i, j, z.re, z.im)).expect("in-memory write");
            }
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }
}

impl fmt::Display for EvaluatedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} ({} -> {})", self.matrix.nrows(), self.matrix.ncols(), self.inputs, self.outputs)?;
        for row in self.matrix.row_iter() {
            let cells: Vec<String> = row.iter().map(|&z| format_sig(z)).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Six significant digits; imaginary part only when non-negligible.
pub fn format_sig(z: C64) -> String {
    let g = |x: f64| {
        if x == 0.0 || x.abs() < 1e-12 {
            "0".to_string()
        } else {
            let mag = x.abs().log10().floor() as i32;
            if (-4..6).contains(&mag) {
                let decimals = (5 - mag).max(0) as usize;
                let s = format!("{x:.decimals$}");
                if s.contains('.') {
                    s.trim_end_matches('0').trim_end_matches('.').to_string()
                } else {
                    s
                }
            } else {
                format!("{x:.5e}")
            }
        }
    };
    if z.im.abs() < 1e-12 * z.re.abs().max(1.0) {
        g(z.re)
    } else if z.re.abs() < 1e-12 * z.im.abs().max(1.0) {
        format!("{}i", g(z.im))
    } else {
        let im = g(z.im);
        if im.starts_with('-') {
            format!("{}{}i", g(z.re), im)
        } else {
            format!("{}+{}i", g(z.re), im)
        }
    }
}

/// `(name, lhs, rhs)` for the Ψ/Ψ̄ exchange identities.
pub const EXCHANGE_IDENTITIES: &[(&str, &str, &str)] = &[
    ("Y1 after PsiBar pair", "Y1 . (PsiBar # PsiBar)", "PsiBar . Y2"),
    ("Y1 after Psi pair", "Y1 . (Psi # Psi)", "Psi . Y2 . P"),
    ("Y2 after Psi pair (K left)", "Y2 . (Psi # Psi)", "Psi . Y1 . (K # Id)"),
    ("Y2 after Psi pair (K right)", "Y2 . (Psi # Psi)", "Psi . Y1 . (Id # K)"),
    ("Y2 after PsiBar pair (K left)", "Y2 . (PsiBar # PsiBar) . P", "PsiBar . Y1 . (K # Id)"),
    ("Y2 after PsiBar pair (K right)", "Y2 . (PsiBar # PsiBar) . P", "PsiBar . Y1 . (Id # K)"),
    ("coY1 then Psi pair", "(Psi # Psi) . coY1", "coY2 . Psi"),
    ("coY1 then PsiBar pair", "(PsiBar # PsiBar) . coY1", "P . coY2 . PsiBar"),
    ("coY2 then PsiBar pair (K left)", "(PsiBar # PsiBar) . coY2", "(K # Id) . coY1 . PsiBar"),
    ("coY2 then PsiBar pair (K right)", "(PsiBar # PsiBar) . coY2", "(Id # K) . coY1 . PsiBar"),
    ("coY2 then Psi pair (K left)", "P . (Psi # Psi) . coY2", "(K # Id) . coY1 . Psi"),
    ("coY2 then Psi pair (K right)", "P . (Psi # Psi) . coY2", "(Id # K) . coY1 . Psi"),
];

/// `(name, lhs, rhs)` for one Frobenius structure, as words.
pub fn frobenius_identities(variant: u8) -> Vec<(String, String, String)> {
    let (y, c, i, e) = (
        format!("Y{variant}"),
        format!("coY{variant}"),
        format!("i{variant}"),
        format!("ci{variant}"),
    );
    let rows = [
        ("frobenius left", format!("{c} . {y}"), format!("(Id # {y}) . ({c} # Id)")),
        ("frobenius right", format!("{c} . {y}"), format!("({y} # Id) . (Id # {c})")),
        ("associativity", format!("{y} . ({y} # Id)"), format!("{y} . (Id # {y})")),
        ("coassociativity", format!("({c} # Id) . {c}"), format!("(Id # {c}) . {c}")),
        ("left unit", format!("{y} . ({i} # Id)"), "Id".to_string()),
        ("right unit", format!("{y} . (Id # {i})"), "Id".to_string()),
        ("left counit", format!("({e} # Id) . {c}"), "Id".to_string()),
        ("right counit", format!("(Id # {e}) . {c}"), "Id".to_string()),
    ];
    rows.into_iter()
        .map(|(n, l, r)| (format!("variant {variant} {n}"), l, r))
        .collect()
}

/// Exchange identities, both Frobenius structures with their unit laws and,
/// on modular data, `ci1 . Psi = 𝔇 · ci2`.
pub fn proposition_suite(cat: &CategoryData, tol: f64) -> Result<Report> {
    let ev = Evaluator::new(cat, tol);
    let one = c64(1.0, 0.0);
    let mut rep = Report::new();
    for (name, l, r) in EXCHANGE_IDENTITIES {
        rep.push(ev.check_scaled(name, l, r, one, tol)?);
    }
    for v in [1, 2] {
        for (name, l, r) in frobenius_identities(v) {
            rep.push(ev.check_scaled(&name, &l, &r, one, tol)?);
        }
    }
    if cat.is_modular(tol) {
        rep.push(ev.check_scaled("counit discrepancy", "ci1 . Psi", "ci2", cat.global_dim(), tol)?);
    }
    Ok(rep)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenusSide {
    /// Ψ-decorated convolution tree with Y1 handle loops, closed by ci1.
    Formula,
    /// Fusion tree with Y2 handle loops, closed by ci2.
    Fusion,
}

/// Word computing the genus-g dimension with `n ≥ 1` boundary insertions.
pub fn genus_word(g: usize, n: usize, side: GenusSide) -> Result<Expr> {
    if n == 0 {
        return Err(Error::InvalidArgument("genus words need at least one insertion".into()));
    }
    let (y, lp, cap) = match side {
        GenusSide::Formula => ("Y1", "Y1 . (K # Id) . coY1", "ci1"),
        GenusSide::Fusion => ("Y2", "Y2 . coY2", "ci2"),
    };
    let mut parts = vec![cap.to_string()];
    parts.extend(std::iter::repeat_n(lp.to_string(), g));
    // left comb: Y . (Y # Id) . (Y # Id # Id) ...
    for k in 1..n {
        let ids = std::iter::repeat_n("Id", k - 1).collect::<Vec<_>>();
        parts.push(if ids.is_empty() { y.to_string() } else { format!("({y} # {})", ids.join(" # ")) });
    }
    if side == GenusSide::Formula {
        parts.push(format!("({})", vec!["Psi"; n].join(" # ")));
    }
    Ok(parse(&parts.join(" . "))?)
}

/// Both genus words on one insertion tuple, with the expected ratio `𝔇`.
#[derive(Clone, Debug)]
pub struct GenusWordCheck {
    pub formula_word: String,
    pub fusion_word: String,
    pub formula_value: C64,
    pub fusion_value: C64,
    pub factor: C64,
    pub residual: f64,
}

pub fn genus_word_check(cat: &CategoryData, g: usize, insertions: &[Label], tol: f64) -> Result<GenusWordCheck> {
    if !cat.is_modular(tol) {
        return Err(Error::InvalidArgument("the formula-side word needs modular data".into()));
    }
    let ev = Evaluator::new(cat, tol);
    let fw = genus_word(g, insertions.len(), GenusSide::Formula)?;
    let uw = genus_word(g, insertions.len(), GenusSide::Fusion)?;
    let fv = ev.eval(&fw)?.apply_labels(insertions)?[0];
    let uv = ev.eval(&uw)?.apply_labels(insertions)?[0];
    let factor = cat.global_dim();
    Ok(GenusWordCheck {
        formula_word: fw.to_string(),
        fusion_word: uw.to_string(),
        formula_value: fv,
        fusion_value: uv,
        factor,
        residual: (fv - factor * uv).norm(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::load_builtin;
    use std::collections::BTreeMap;

    fn cat(name: &str) -> CategoryData {
        load_builtin(name, &BTreeMap::new()).unwrap()
    }

    #[test]
    fn typecheck_examples() {
        assert_eq!(typecheck(&parse("Psi").unwrap()), Ok((1, 1)));
        assert_eq!(typecheck(&parse("ci1 . Y1 . (i1 # Id)").unwrap()), Ok((1, 0)));
        let err = typecheck(&parse("Y1 . Psi").unwrap()).unwrap_err();
        assert_eq!(err, ArityError::Compose { pos: 3, needs: 2, got: 1 });
    }

    #[test]
    fn evaluate_examples() {
        let fib = cat("fibonacci");
        let id = evaluate(&parse("Id").unwrap(), &fib).unwrap();
        assert_eq!(id.matrix, DMatrix::identity(2, 2));
        let y2 = evaluate(&parse("Y2").unwrap(), &fib).unwrap();
        let img = y2.apply_labels(&[1, 1]).unwrap();
        assert_eq!(img.as_slice(), &[c64(1.0, 0.0), c64(1.0, 0.0)]);
        let ss = evaluate(&parse("Psi . Psi").unwrap(), &fib).unwrap();
        let dd = fib.global_dim();
        assert!(max_diff(&ss.matrix, &DMatrix::identity(2, 2).map(|z: C64| z * dd)) < 1e-12);
    }

    #[test]
    fn check_equal_examples() {
        let fib = cat("fibonacci");
        assert!(check_equal("Y1 . (PsiBar # PsiBar)", "PsiBar . Y2", &fib, 1e-9).unwrap().passed);
        assert!(check_equal("Y2 . (Psi # Psi)", "Psi . Y1 . (K # Id)", &fib, 1e-9).unwrap().passed);
        let ising = cat("ising");
        assert!(check_equal("(Id # Y2) . (coY2 # Id)", "coY2 . Y2", &ising, 1e-9).unwrap().passed);
        assert!(!check_equal("Y1", "Y2", &ising, 1e-9).unwrap().passed);
        assert!(matches!(check_equal("Y1", "Psi", &ising, 1e-9), Err(Error::Arity(ArityError::Signature { .. }))));
    }

    #[test]
    fn suite_passes_on_small_builtins() {
        for name in ["trivial", "fibonacci", "ising", "semion"] {
            let rep = proposition_suite(&cat(name), 1e-9).unwrap();
            assert!(rep.passed(), "{name}: {rep}");
            assert_eq!(rep.checks.len(), 12 + 16 + 1);
        }
    }

    #[test]
    fn genus_word_shapes() {
        let w = genus_word(0, 2, GenusSide::Fusion).unwrap();
        assert_eq!(w.to_string(), "ci2 . Y2");
        let w = genus_word(1, 3, GenusSide::Formula).unwrap();
        assert_eq!(typecheck(&w), Ok((3, 0)));
        assert!(genus_word(1, 0, GenusSide::Fusion).is_err());
    }

    #[test]
    fn genus_words_agree_up_to_global_dim() {
        let fib = cat("fibonacci");
        for g in 0..3 {
            for ins in [vec![0], vec![1], vec![1, 1], vec![1, 1, 1]] {
                let c = genus_word_check(&fib, g, &ins, 1e-9).unwrap();
                assert!(c.residual < 1e-9, "g={g} {ins:?}: {c:?}");
            }
        }
    }

    #[test]
    fn json_roundtrip_is_exact() {
        let fib = cat("fibonacci");
        let m = evaluate(&parse("(Psi # PsiBar) . coY2 . K").unwrap(), &fib).unwrap();
        let back = EvaluatedMap::from_json(&m.to_json()).unwrap();
        assert_eq!(back, m);
        let csv = m.to_csv();
        assert_eq!(csv.lines().count(), 1 + 4 * 2);
    }

    #[test]
    fn significant_digits() {
        assert_eq!(format_sig(c64(3.6180339887, 0.0)), "3.61803");
        assert_eq!(format_sig(c64(-1.0, 0.0)), "-1");
        assert_eq!(format_sig(c64(0.0, 0.0)), "0");
        assert_eq!(format_sig(c64(0.0, 1.0)), "1i");
        assert_eq!(format_sig(c64(1.0, -0.5)), "1-0.5i");
    }
}
