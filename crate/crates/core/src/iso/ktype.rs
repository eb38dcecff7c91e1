//! Depth-k Ehrenfeucht–Fraissé invariants for linear orders.
//!
//! The depth-0 code of every order (including the empty one) is a single
//! atom: a zero-round game is always a win for the duplicator. The
//! depth-k code of an order `A` is the set of pairs
//! `(code(k-1, A<x), code(k-1, A>x))` over all points `x`; the empty
//! order's code is the empty set. Two orders are k-round
//! EF-equivalent exactly when their depth-k codes are equal: after the
//! first exchange `x ↦ y`, the game splits into independent games on the
//! left and right parts.
//!
//! Codes are hash-consed, so equality is id equality, and every
//! constructor of the term algebra has a code-level combinator:
//! concatenation composes, ω-sums stabilize after finitely many
//! compositions (the code sequence of the finite powers is eventually
//! constant), η-sums close in one induction on depth because density
//! erases position.

use crate::order::OrderTerm;
use std::collections::HashMap;

pub type CodeId = u32;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum CodeVal {
    Atom,
    Pairs(Vec<(CodeId, CodeId)>),
}

/// Interning context and memo tables. Create one per computation batch;
/// results are deterministic regardless of sharing.
pub struct KtCtx {
    vals: Vec<CodeVal>,
    ids: HashMap<CodeVal, CodeId>,
    compose_memo: HashMap<(u8, CodeId, CodeId), CodeId>,
    strip_memo: HashMap<(u8, CodeId), CodeId>,
    mirror_memo: HashMap<(u8, CodeId), CodeId>,
    term_memo: HashMap<(OrderTerm, u8), CodeId>,
}

/// Stabilization guard for the ω-sum fixpoint; the classical bound for
/// depth j is 2^j - 1 compositions.
fn omega_cap(depth: u8) -> u32 {
    (1u32 << depth) + 2
}

impl KtCtx {
    pub fn new() -> KtCtx {
        KtCtx {
            vals: Vec::new(),
            ids: HashMap::new(),
            compose_memo: HashMap::new(),
            strip_memo: HashMap::new(),
            mirror_memo: HashMap::new(),
            term_memo: HashMap::new(),
        }
    }

    fn intern(&mut self, val: CodeVal) -> CodeId {
        if let Some(id) = self.ids.get(&val) {
            return *id;
        }
        let id = self.vals.len() as CodeId;
        self.vals.push(val.clone());
        self.ids.insert(val, id);
        id
    }

    fn pairs(&mut self, mut v: Vec<(CodeId, CodeId)>) -> CodeId {
        v.sort_unstable();
        v.dedup();
        self.intern(CodeVal::Pairs(v))
    }

    fn atom(&mut self) -> CodeId {
        self.intern(CodeVal::Atom)
    }

    fn pair_list(&self, id: CodeId) -> Vec<(CodeId, CodeId)> {
        match &self.vals[id as usize] {
            CodeVal::Pairs(v) => v.clone(),
            CodeVal::Atom => panic!("depth-0 code has no pairs"),
        }
    }

    /// Code of the empty order at `depth`.
    pub fn empty(&mut self, depth: u8) -> CodeId {
        if depth == 0 {
            self.atom()
        } else {
            self.pairs(Vec::new())
        }
    }

    /// Code of the one-point order at `depth`.
    pub fn singleton(&mut self, depth: u8) -> CodeId {
        if depth == 0 {
            self.atom()
        } else {
            let e = self.empty(depth - 1);
            self.pairs(vec![(e, e)])
        }
    }

    /// Lower a depth-`depth` code to depth `depth - 1`.
    fn strip(&mut self, depth: u8, code: CodeId) -> CodeId {
        debug_assert!(depth >= 1);
        if depth == 1 {
            return self.atom();
        }
        if let Some(&r) = self.strip_memo.get(&(depth, code)) {
            return r;
        }
        let out: Vec<(CodeId, CodeId)> = self
            .pair_list(code)
            .into_iter()
            .map(|(l, r)| (self.strip(depth - 1, l), self.strip(depth - 1, r)))
            .collect();
        let r = self.pairs(out);
        self.strip_memo.insert((depth, code), r);
        r
    }

    /// Code of `A + B` from the codes of `A` and `B`.
    pub fn compose(&mut self, depth: u8, a: CodeId, b: CodeId) -> CodeId {
        if depth == 0 {
            return self.atom();
        }
        if let Some(&r) = self.compose_memo.get(&(depth, a, b)) {
            return r;
        }
        let a_low = self.strip(depth, a);
        let b_low = self.strip(depth, b);
        let mut out = Vec::new();
        for (l, r) in self.pair_list(a) {
            let r2 = self.compose(depth - 1, r, b_low);
            out.push((l, r2));
        }
        for (l, r) in self.pair_list(b) {
            let l2 = self.compose(depth - 1, a_low, l);
            out.push((l2, r));
        }
        let r = self.pairs(out);
        self.compose_memo.insert((depth, a, b), r);
        r
    }

    /// Code of the order-reversal.
    pub fn mirror(&mut self, depth: u8, code: CodeId) -> CodeId {
        if depth == 0 {
            return self.atom();
        }
        if let Some(&r) = self.mirror_memo.get(&(depth, code)) {
            return r;
        }
        let out: Vec<(CodeId, CodeId)> = self
            .pair_list(code)
            .into_iter()
            .map(|(l, r)| (self.mirror(depth - 1, r), self.mirror(depth - 1, l)))
            .collect();
        let r = self.pairs(out);
        self.mirror_memo.insert((depth, code), r);
        r
    }

    /// Codes of `A` at every depth `0..=depth`, from its depth-`depth` code.
    fn tower(&mut self, depth: u8, code: CodeId) -> Vec<CodeId> {
        let mut t = vec![code; depth as usize + 1];
        for j in (0..depth).rev() {
            t[j as usize] = self.strip(j + 1, t[j as usize + 1]);
        }
        t
    }

    /// Code of the ω-indexed sum of copies of `A`.
    pub fn omega_sum(&mut self, depth: u8, a: CodeId) -> CodeId {
        let at = self.tower(depth, a);
        let mut w = self.atom();
        for j in 1..=depth {
            let aj = at[j as usize];
            let prev_w = w;
            let mut out = Vec::new();
            // prefix = code of the first i copies at depth j-1
            let mut prefix = self.empty(j - 1);
            let mut guard = 0u32;
            loop {
                for (l, r) in self.pair_list(aj) {
                    let left = self.compose(j - 1, prefix, l);
                    let right = self.compose(j - 1, r, prev_w);
                    out.push((left, right));
                }
                let next = self.compose(j - 1, prefix, at[j as usize - 1]);
                if next == prefix {
                    break;
                }
                prefix = next;
                guard += 1;
                assert!(guard <= omega_cap(j), "omega-sum failed to stabilize");
            }
            w = self.pairs(out);
        }
        w
    }

    pub fn omega_star_sum(&mut self, depth: u8, a: CodeId) -> CodeId {
        let m = self.mirror(depth, a);
        let s = self.omega_sum(depth, m);
        self.mirror(depth, s)
    }

    pub fn zeta_sum(&mut self, depth: u8, a: CodeId) -> CodeId {
        let left = self.omega_star_sum(depth, a);
        let right = self.omega_sum(depth, a);
        self.compose(depth, left, right)
    }

    /// Code of the η-indexed sum of copies of `A`: on both sides of any
    /// point the remainder is again an η-sum.
    pub fn eta_sum(&mut self, depth: u8, a: CodeId) -> CodeId {
        let at = self.tower(depth, a);
        let mut h = self.atom();
        for j in 1..=depth {
            let prev_h = h;
            let mut out = Vec::new();
            for (l, r) in self.pair_list(at[j as usize]) {
                let left = self.compose(j - 1, prev_h, l);
                let right = self.compose(j - 1, r, prev_h);
                out.push((left, right));
            }
            h = self.pairs(out);
        }
        h
    }

    /// Finite sum of `n` copies, with an early exit once the power
    /// sequence stabilizes.
    fn finite_power(&mut self, depth: u8, a: CodeId, n: u128) -> CodeId {
        let mut acc = self.empty(depth);
        let mut i: u128 = 0;
        while i < n {
            let next = self.compose(depth, acc, a);
            if next == acc {
                return acc;
            }
            acc = next;
            i += 1;
        }
        acc
    }

    fn replace_code(&mut self, depth: u8, major: &OrderTerm, minor_code: CodeId) -> CodeId {
        match major {
            OrderTerm::Finite(k) => self.finite_power(depth, minor_code, u128::from(*k)),
            OrderTerm::Omega => self.omega_sum(depth, minor_code),
            OrderTerm::OmegaStar => self.omega_star_sum(depth, minor_code),
            OrderTerm::Zeta => self.zeta_sum(depth, minor_code),
            OrderTerm::Eta => self.eta_sum(depth, minor_code),
            OrderTerm::Sum(parts) => {
                let mut acc = self.empty(depth);
                for p in parts {
                    let c = self.replace_code(depth, p, minor_code);
                    acc = self.compose(depth, acc, c);
                }
                acc
            }
            OrderTerm::Replace(m1, m2) => {
                let inner = self.replace_code(depth, m2, minor_code);
                self.replace_code(depth, m1, inner)
            }
        }
    }

    /// Depth-`depth` code of a term.
    pub fn ktype(&mut self, term: &OrderTerm, depth: u8) -> CodeId {
        if let Some(&r) = self.term_memo.get(&(term.clone(), depth)) {
            return r;
        }
        let s = self.singleton(depth);
        let r = self.replace_code(depth, term, s);
        self.term_memo.insert((term.clone(), depth), r);
        r
    }
}

impl Default for KtCtx {
    fn default() -> Self {
        KtCtx::new()
    }
}

/// Canonical depth-k equivalence invariant of a term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KType {
    pub depth: u8,
    pub code: CodeId,
}

impl KtCtx {
    pub fn ktype_of(&mut self, term: &OrderTerm, depth: u8) -> KType {
        KType {
            depth,
            code: self.ktype(term, depth),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use OrderTerm::*;

    #[test]
    fn finite_orders_distinguish_below_threshold() {
        let mut ctx = KtCtx::new();
        // m and m' agree at depth k iff m = m' or both >= 2^k - 1
        for k in 1..=4u8 {
            let bound = (1u32 << k) - 1;
            for m in 1..=20u32 {
                for mm in 1..=20u32 {
                    let a = ctx.ktype(&Finite(m), k);
                    let b = ctx.ktype(&Finite(mm), k);
                    let expect = m == mm || (m >= bound && mm >= bound);
                    assert_eq!(a == b, expect, "k={k} m={m} m'={mm}");
                }
            }
        }
    }

    #[test]
    fn omega_detects_its_least_element_at_depth_two() {
        let mut ctx = KtCtx::new();
        let w = ctx.ktype(&Omega, 2);
        let z = ctx.ktype(&Zeta, 2);
        assert_ne!(w, z);
        let w1 = ctx.ktype(&Omega, 1);
        let z1 = ctx.ktype(&Zeta, 1);
        assert_eq!(w1, z1);
    }

    #[test]
    fn eta_and_zeta_split_at_depth_three() {
        let mut ctx = KtCtx::new();
        assert_eq!(ctx.ktype(&Eta, 2), ctx.ktype(&Zeta, 2));
        assert_ne!(ctx.ktype(&Eta, 3), ctx.ktype(&Zeta, 3));
    }

    #[test]
    fn composition_matches_flattening() {
        let mut ctx = KtCtx::new();
        let parts = [Omega, Eta, Finite(2)];
        for k in 0..=5u8 {
            let nested = OrderTerm::sum(vec![
                OrderTerm::sum(vec![parts[0].clone(), parts[1].clone()]),
                parts[2].clone(),
            ]);
            let flat = OrderTerm::sum(parts.to_vec());
            assert_eq!(ctx.ktype(&nested, k), ctx.ktype(&flat, k));
        }
    }

    #[test]
    fn replace_absorptions_hold_at_code_level() {
        let mut ctx = KtCtx::new();
        for k in 0..=5u8 {
            let a = ctx.ktype(&OrderTerm::replace(Omega, Finite(3)), k);
            let b = ctx.ktype(&Omega, k);
            assert_eq!(a, b, "k={k}");
            let c = ctx.ktype(&OrderTerm::replace(Eta, Eta), k);
            let d = ctx.ktype(&Eta, k);
            assert_eq!(c, d, "k={k}");
        }
    }

    #[test]
    fn mirror_duality() {
        let mut ctx = KtCtx::new();
        for t in [
            Omega,
            OrderTerm::sum(vec![Finite(1), Eta]),
            OrderTerm::replace(Omega, Finite(2)),
        ] {
            for k in 0..=5u8 {
                let a = ctx.ktype(&t, k);
                let am = ctx.mirror(k, a);
                let b = ctx.ktype(&t.reversed(), k);
                assert_eq!(am, b, "{t} k={k}");
            }
        }
    }
}
