//! Coalitions as bitmasks over at most [`MAX_PLAYERS`] players.
//!
//! Players are 0-based inside the library: player `i` belongs to a
//! coalition iff bit `i` is set. The 1-based numbering users see exists
//! only in the parsing and printing layer.

use std::fmt;

pub const MAX_PLAYERS: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Coalition(u32);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub fn from_mask(mask: u32) -> Self {
        Coalition(mask)
    }

    pub fn grand(n: usize) -> Self {
        debug_assert!(n <= MAX_PLAYERS);
        Coalition(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(player: usize) -> Self {
        debug_assert!(player < MAX_PLAYERS);
        Coalition(1 << player)
    }

    pub fn from_players<I: IntoIterator<Item = usize>>(players: I) -> Self {
        Coalition(players.into_iter().fold(0u32, |m, p| m | (1 << p)))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn size(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, player: usize) -> bool {
        self.0 & (1 << player) != 0
    }

    pub fn with(self, player: usize) -> Self {
        Coalition(self.0 | (1 << player))
    }

    pub fn without(self, player: usize) -> Self {
        Coalition(self.0 & !(1 << player))
    }

    /// N ∖ S for a game with `n` players.
    pub fn complement(self, n: usize) -> Self {
        Coalition(Self::grand(n).0 & !self.0)
    }

    pub fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn fits(self, n: usize) -> bool {
        (self.0 as u64) < (1u64 << n)
    }

    /// Members in increasing order, 0-based.
    pub fn players(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..MAX_PLAYERS).filter(move |&i| mask & (1 << i) != 0)
    }

    /// Every coalition of an `n`-player game, in ascending mask order.
    pub fn all(n: usize) -> impl Iterator<Item = Coalition> {
        (0..(1u32 << n)).map(Coalition)
    }

    /// All subsets of `self` in ascending mask order (including ∅ and self).
    pub fn subsets(self) -> SubsetIter {
        SubsetIter {
            full: self.0,
            next: Some(0),
        }
    }
}

/// Walks the subsets of a mask with the `(s - full) & full` trick.
pub struct SubsetIter {
    full: u32,
    next: Option<u32>,
}

impl Iterator for SubsetIter {
    type Item = Coalition;

    fn next(&mut self) -> Option<Coalition> {
        let cur = self.next?;
        self.next = if cur == self.full {
            None
        } else {
            Some((cur.wrapping_sub(self.full)) & self.full)
        };
        Some(Coalition(cur))
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// 1-based player list, e.g. `{1,3}`.
impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.players().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p + 1)?;
        }
        write!(f, "}}")
    }
}

/// Every ordering of players 0..n in lexicographic order.
pub fn player_orders(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![current.clone()];
    loop {
        let Some(k) = (1..n).rev().find(|&k| current[k - 1] < current[k]).map(|k| k - 1) else {
            return out;
        };
        let l = (k + 1..n).rev().find(|&l| current[k] < current[l]).unwrap();
        current.swap(k, l);
        current[k + 1..].reverse();
        out.push(current.clone());
    }
}
