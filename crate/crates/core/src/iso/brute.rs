//! Exhaustive EF game search on finite orders — the independent oracle.
//!
//! The game value is computed straight from the rules: a spoiler move is a
//! point of either board, a duplicator reply a point of the other, and a
//! play of an exchange splits the remaining game into the two independent
//! subgames on the left and right parts. No equivalence threshold is
//! assumed anywhere; the classical `2^k - 1` rule is what the tests
//! recover from this search.

use super::IsoError;
use crate::order::{Cardinality, OrderTerm};

pub const MAX_SIZE: u128 = 25;
pub const MAX_DEPTH: u8 = 4;

/// Exact k-round EF game value for two finite orders.
pub fn brute_force_ef(a: &OrderTerm, b: &OrderTerm, k: u8) -> Result<bool, IsoError> {
    let (Cardinality::Finite(m), Cardinality::Finite(n)) = (a.size(), b.size()) else {
        return Err(IsoError::NotFinite);
    };
    if m > MAX_SIZE || n > MAX_SIZE {
        return Err(IsoError::SizeGuard { max: MAX_SIZE });
    }
    if k > MAX_DEPTH {
        return Err(IsoError::DepthGuard { max: MAX_DEPTH });
    }
    let mut memo = Memo::new(k, m as usize, n as usize);
    Ok(memo.wins(k, m as usize, n as usize))
}

struct Memo {
    table: Vec<Option<bool>>,
    m_max: usize,
    n_max: usize,
}

impl Memo {
    fn new(k: u8, m: usize, n: usize) -> Memo {
        Memo {
            table: vec![None; (k as usize + 1) * (m + 1) * (n + 1)],
            m_max: m,
            n_max: n,
        }
    }

    fn slot(&self, k: u8, m: usize, n: usize) -> usize {
        (k as usize * (self.m_max + 1) + m) * (self.n_max + 1) + n
    }

    fn wins(&mut self, k: u8, m: usize, n: usize) -> bool {
        if k == 0 {
            return true;
        }
        let slot = self.slot(k, m, n);
        if let Some(v) = self.table[slot] {
            return v;
        }
        // spoiler picks a side and a point; duplicator answers on the
        // other side; both split games must then be won
        let forward = (0..m).all(|x| {
            (0..n).any(|y| self.wins(k - 1, x, y) && self.wins(k - 1, m - 1 - x, n - 1 - y))
        });
        let backward = (0..n).all(|y| {
            (0..m).any(|x| self.wins(k - 1, x, y) && self.wins(k - 1, m - 1 - x, n - 1 - y))
        });
        let v = forward && backward;
        self.table[slot] = Some(v);
        v
    }
}
