//! Operators between tensor products of simples, stored block-diagonally by
//! total charge in the left-combed fusion-tree basis.
//!
//! A tree over leaves `a_0 … a_{n-1}` is the path `m` with `m[0] = a_0`,
//! `m[q] ∈ m[q-1] ⊗ a_q`; its root is `m[n-1]`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use nalgebra::DMatrix;

use super::fr::FrData;
use crate::category::CategoryData;
use crate::{c64, Label, C64};

#[derive(Debug)]
pub(crate) struct TreeList {
    pub list: Vec<Vec<Label>>,
    index: HashMap<Vec<Label>, usize>,
}

impl TreeList {
    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn index(&self, t: &[Label]) -> usize {
        self.index[t]
    }
}

/// Linear map `src → dst`, one block per root charge.
#[derive(Clone, Debug, PartialEq)]
pub struct TreeOp {
    pub src: Vec<Label>,
    pub dst: Vec<Label>,
    pub blocks: Vec<DMatrix<C64>>,
}

impl TreeOp {
    pub fn scale(&self, k: C64) -> TreeOp {
        TreeOp { src: self.src.clone(), dst: self.dst.clone(), blocks: self.blocks.iter().map(|b| b * k).collect() }
    }

    pub fn add_assign(&mut self, other: &TreeOp) {
        debug_assert_eq!((&self.src, &self.dst), (&other.src, &other.dst));
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a += b;
        }
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &TreeOp) -> TreeOp {
        assert_eq!(self.src, other.dst, "composition leaves differ");
        TreeOp {
            src: other.src.clone(),
            dst: self.dst.clone(),
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a * b).collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.blocks.iter().flat_map(|b| b.iter()).map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// A braid generator at position `p`; `inverse` selects `c⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Move {
    pub p: usize,
    pub inverse: bool,
}

type TreeCache = HashMap<(Vec<Label>, Label), Rc<TreeList>>;

pub(crate) struct Trees<'a> {
    pub cat: &'a CategoryData,
    pub fr: &'a FrData,
    cache: RefCell<TreeCache>,
}

impl<'a> Trees<'a> {
    pub fn new(cat: &'a CategoryData, fr: &'a FrData) -> Self {
        Trees { cat, fr, cache: RefCell::new(HashMap::new()) }
    }

    fn rank(&self) -> usize {
        self.cat.rank()
    }

    fn n(&self, a: Label, b: Label, c: Label) -> bool {
        self.cat.n(a, b, c) > 0
    }

    pub fn trees(&self, leaves: &[Label], root: Label) -> Rc<TreeList> {
        let key = (leaves.to_vec(), root);
        if let Some(t) = self.cache.borrow().get(&key) {
            return t.clone();
        }
        let mut list = Vec::new();
        if !leaves.is_empty() {
            let mut path = vec![leaves[0]];
            self.extend(leaves, root, &mut path, &mut list);
        }
        let index = list.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let t = Rc::new(TreeList { list, index });
        self.cache.borrow_mut().insert(key, t.clone());
        t
    }

    fn extend(&self, leaves: &[Label], root: Label, path: &mut Vec<Label>, out: &mut Vec<Vec<Label>>) {
        let q = path.len();
        if q == leaves.len() {
            if path[q - 1] == root {
                out.push(path.clone());
            }
            return;
        }
        for m in 0..self.rank() {
            if self.n(path[q - 1], leaves[q], m) {
                path.push(m);
                self.extend(leaves, root, path, out);
                path.pop();
            }
        }
    }

    pub fn zero(&self, src: &[Label], dst: &[Label]) -> TreeOp {
        let blocks = (0..self.rank())
            .map(|c| DMatrix::zeros(self.trees(dst, c).len(), self.trees(src, c).len()))
            .collect();
        TreeOp { src: src.to_vec(), dst: dst.to_vec(), blocks }
    }

    pub fn identity(&self, leaves: &[Label]) -> TreeOp {
        let blocks = (0..self.rank())
            .map(|c| {
                let n = self.trees(leaves, c).len();
                DMatrix::identity(n, n)
            })
            .collect();
        TreeOp { src: leaves.to_vec(), dst: leaves.to_vec(), blocks }
    }

    /// Braiding of the strands at positions `p`, `p+1`.
    pub fn braid(&self, leaves: &[Label], p: usize, inverse: bool) -> TreeOp {
        let fr = self.fr;
        let mut dst = leaves.to_vec();
        dst.swap(p, p + 1);
        let (a, b) = (leaves[p], leaves[p + 1]);
        let rv = |x: Label, y: Label, h: Label| if inverse { 1.0 / fr.r(y, x, h) } else { fr.r(x, y, h) };
        let mut op = self.zero(leaves, &dst);
        for c in 0..self.rank() {
            let (st, dt) = (self.trees(leaves, c), self.trees(&dst, c));
            for (j, t) in st.list.iter().enumerate() {
                if p == 0 {
                    let mut nt = t.clone();
                    nt[0] = b;
                    op.blocks[c][(dt.index(&nt), j)] += rv(a, b, t[1]);
                    continue;
                }
                let (m, f, e) = (t[p - 1], t[p], t[p + 1]);
                for h in 0..self.rank() {
                    let x = fr.f(m, a, b, e, f, h);
                    if x == C64::default() {
                        continue;
                    }
                    let r = rv(a, b, h);
                    for f2 in 0..self.rank() {
                        if self.n(m, b, f2) && self.n(f2, a, e) {
                            let mut nt = t.clone();
                            nt[p] = f2;
                            op.blocks[c][(dt.index(&nt), j)] += x * r * fr.f_inv(m, b, a, e, h, f2);
                        }
                    }
                }
            }
        }
        op
    }

    pub fn braid_word(&self, leaves: &[Label], moves: &[Move]) -> TreeOp {
        let mut op = self.identity(leaves);
        for mv in moves {
            let b = self.braid(&op.dst, mv.p, mv.inverse);
            op = b.after(&op);
        }
        op
    }

    /// Projects strands `p`, `p+1` onto the channel `k` (normalized vertex).
    pub fn fuse(&self, leaves: &[Label], p: usize, k: Label) -> TreeOp {
        let dst: Vec<Label> = [&leaves[..p], &[k], &leaves[p + 2..]].concat();
        let mut op = self.zero(leaves, &dst);
        let (a, b) = (leaves[p], leaves[p + 1]);
        for c in 0..self.rank() {
            let (st, dt) = (self.trees(leaves, c), self.trees(&dst, c));
            for (j, t) in st.list.iter().enumerate() {
                if p == 0 {
                    if t[1] == k {
                        let nt: Vec<Label> = [&[k][..], &t[2..]].concat();
                        op.blocks[c][(dt.index(&nt), j)] += c64(1.0, 0.0);
                    }
                    continue;
                }
                let (m, f, e) = (t[p - 1], t[p], t[p + 1]);
                let x = self.fr.f(m, a, b, e, f, k);
                if x != C64::default() {
                    let nt: Vec<Label> = [&t[..p], &t[p + 1..]].concat();
                    op.blocks[c][(dt.index(&nt), j)] += x;
                }
            }
        }
        op
    }

    /// Inverse direction of [`Trees::fuse`]: splits the leaf at `p` (labeled
    /// `k`) into `leaves[p]`, `leaves[p+1]`.
    pub fn split(&self, leaves: &[Label], p: usize, k: Label) -> TreeOp {
        let src: Vec<Label> = [&leaves[..p], &[k], &leaves[p + 2..]].concat();
        let mut op = self.zero(&src, leaves);
        let (a, b) = (leaves[p], leaves[p + 1]);
        if !self.n(a, b, k) {
            return op;
        }
        for c in 0..self.rank() {
            let (st, dt) = (self.trees(&src, c), self.trees(leaves, c));
            for (j, t) in st.list.iter().enumerate() {
                if p == 0 {
                    let nt: Vec<Label> = [&[a][..], t].concat();
                    op.blocks[c][(dt.index(&nt), j)] += c64(1.0, 0.0);
                    continue;
                }
                let (m, e) = (t[p - 1], t[p]);
                for f in 0..self.rank() {
                    if self.n(m, a, f) && self.n(f, b, e) {
                        let nt: Vec<Label> = [&t[..p], &[f], &t[p..]].concat();
                        op.blocks[c][(dt.index(&nt), j)] += self.fr.f_inv(m, a, b, e, k, f);
                    }
                }
            }
        }
        op
    }

    /// `op ⊗ id_extra`.
    pub fn tensor_id(&self, op: &TreeOp, extra: &[Label]) -> TreeOp {
        let src = [&op.src[..], extra].concat();
        let dst = [&op.dst[..], extra].concat();
        let n = op.src.len();
        let mut out = self.zero(&src, &dst);
        for c in 0..self.rank() {
            let (st, dt) = (self.trees(&src, c), self.trees(&dst, c));
            for (j, t) in st.list.iter().enumerate() {
                let (pre, suf) = t.split_at(n);
                let m = pre[n - 1];
                let (sp, dp) = (self.trees(&op.src, m), self.trees(&op.dst, m));
                let jj = sp.index(pre);
                for (ii, q) in dp.list.iter().enumerate() {
                    let v = op.blocks[m][(ii, jj)];
                    if v != C64::default() {
                        let nt = [&q[..], suf].concat();
                        out.blocks[c][(dt.index(&nt), j)] += v;
                    }
                }
            }
        }
        out
    }

    /// Quantum trace over the last strand.
    pub fn ptrace(&self, op: &TreeOp) -> TreeOp {
        assert_eq!(op.src.last(), op.dst.last(), "traced strand must match");
        let src = &op.src[..op.src.len() - 1];
        let dst = &op.dst[..op.dst.len() - 1];
        let mut out = self.zero(src, dst);
        for c in 0..self.rank() {
            let (st, dt) = (self.trees(&op.src, c), self.trees(&op.dst, c));
            for (j, t) in st.list.iter().enumerate() {
                let m = t[t.len() - 2];
                for (i, q) in dt.list.iter().enumerate() {
                    if q[q.len() - 2] != m {
                        continue;
                    }
                    let v = op.blocks[c][(i, j)];
                    if v == C64::default() {
                        continue;
                    }
                    let ii = self.trees(dst, m).index(&q[..q.len() - 1]);
                    let jj = self.trees(src, m).index(&t[..t.len() - 1]);
                    out.blocks[m][(ii, jj)] += self.cat.d(c) / self.cat.d(m) * v;
                }
            }
        }
        out
    }
}

/// Moves taking `(A_0..A_{n1}, B_0..B_{n2})` to `(B.., A..)` by sliding each
/// `B_j` leftwards; `kind(a, j)` picks the inverse crossing for the pair.
pub(crate) fn block_swap(n1: usize, n2: usize, kind: impl Fn(usize, usize) -> bool) -> Vec<Move> {
    let mut moves = Vec::new();
    for j in 0..n2 {
        for p in (j..n1 + j).rev() {
            moves.push(Move { p, inverse: kind(p - j, j) });
        }
    }
    moves
}

/// `(i_1..i_g, j_1..j_g) → (i_1, j_1, i_2, j_2, ..)`.
pub(crate) fn interleave(g: usize, inverse: bool) -> Vec<Move> {
    let mut moves = Vec::new();
    for m in 0..g {
        for p in (2 * m + 1..g + m).rev() {
            moves.push(Move { p, inverse });
        }
    }
    moves
}

/// The word undoing `moves`.
pub(crate) fn reverse_word(moves: &[Move]) -> Vec<Move> {
    moves.iter().rev().map(|m| Move { p: m.p, inverse: !m.inverse }).collect()
}

pub(crate) fn shift(moves: &[Move], by: usize) -> Vec<Move> {
    moves.iter().map(|m| Move { p: m.p + by, inverse: m.inverse }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::source::load_category;

    fn max_diff(a: &TreeOp, b: &TreeOp) -> f64 {
        a.blocks
            .iter()
            .zip(&b.blocks)
            .flat_map(|(x, y)| x.iter().zip(y.iter()).map(|(u, v)| (u - v).norm()))
            .fold(0.0, f64::max)
    }

    #[test]
    fn tree_counts_match_hom_dims() {
        let cat = load_category("fibonacci").unwrap();
        let fr = FrData::builtin(&cat).unwrap();
        let t = Trees::new(&cat, &fr);
        assert_eq!(t.trees(&[1, 1, 1], 1).len(), 2);
        assert_eq!(t.trees(&[1, 1, 1, 1], 0).len(), 2);
        assert_eq!(t.trees(&[1, 1, 1, 1], 1).len(), 3);
    }

    #[test]
    fn braid_relations() {
        for name in ["fibonacci", "ising", "su2(3)"] {
            let cat = load_category(name).unwrap();
            let fr = FrData::builtin(&cat).unwrap();
            let t = Trees::new(&cat, &fr);
            let r = cat.rank() - 1;
            let leaves = [1, r, 1, r.min(2)];
            for p in 0..3 {
                let b = t.braid(&leaves, p, false);
                let bi = t.braid(&b.dst, p, true);
                assert!(max_diff(&bi.after(&b), &t.identity(&leaves)) < 1e-12, "{name} inverse at {p}");
            }
            // σ1σ2σ1 = σ2σ1σ2
            let m = |p| Move { p, inverse: false };
            let lhs = t.braid_word(&leaves, &[m(1), m(2), m(1)]);
            let rhs = t.braid_word(&leaves, &[m(2), m(1), m(2)]);
            assert!(max_diff(&lhs, &rhs) < 1e-12, "{name} yang-baxter");
            let lhs = t.braid_word(&leaves, &[m(0), m(1), m(0)]);
            let rhs = t.braid_word(&leaves, &[m(1), m(0), m(1)]);
            assert!(max_diff(&lhs, &rhs) < 1e-12, "{name} yang-baxter at 0");
        }
    }

    #[test]
    fn split_then_fuse_resolves_identity() {
        let cat = load_category("ising").unwrap();
        let fr = FrData::builtin(&cat).unwrap();
        let t = Trees::new(&cat, &fr);
        let leaves = [1, 1, 1, 1];
        for p in 0..3 {
            let mut sum = t.zero(&leaves, &leaves);
            for k in 0..3 {
                if cat.n(leaves[p], leaves[p + 1], k) > 0 {
                    sum.add_assign(&t.split(&leaves, p, k).after(&t.fuse(&leaves, p, k)));
                }
            }
            assert!(max_diff(&sum, &t.identity(&leaves)) < 1e-12);
        }
    }

    #[test]
    fn trace_of_identity_is_dimension() {
        let cat = load_category("fibonacci").unwrap();
        let fr = FrData::builtin(&cat).unwrap();
        let t = Trees::new(&cat, &fr);
        let tr = t.ptrace(&t.identity(&[1, 1]));
        // id_τ ⊗ id_τ traced on the right gives d_τ id_τ
        assert!((tr.blocks[1][(0, 0)] - cat.d(1)).norm() < 1e-12);
    }

    #[test]
    fn block_swap_and_interleave_targets() {
        let apply = |mut v: Vec<usize>, moves: &[Move]| {
            for m in moves {
                v.swap(m.p, m.p + 1);
            }
            v
        };
        assert_eq!(apply(vec![0, 1, 2, 10, 11], &block_swap(3, 2, |_, _| false)), vec![10, 11, 0, 1, 2]);
        assert_eq!(apply(vec![0, 1, 2, 10, 11, 12], &interleave(3, false)), vec![0, 10, 1, 11, 2, 12]);
    }
}
