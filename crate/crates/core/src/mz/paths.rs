//! Ordered lowering words `z41^θ1 z31^θ2 z42^θ3 z32^θ4 w` and the tables of
//! admissible words spanning `K⁺(m,n)` in each parameter regime.

use crate::module::Weight;
use crate::mz::zops::ZId::{self, Z31, Z32, Z41, Z42};

/// Word for the exponent pattern `θ` (θ1 is the leftmost letter `z41`).
pub fn word_for_theta(theta: [u8; 4]) -> Vec<ZId> {
    ZId::LOWERING
        .iter()
        .zip(theta)
        .filter(|(_, t)| *t == 1)
        .map(|(&z, _)| z)
        .collect()
}

/// All sixteen ordered words.
pub fn all_words() -> Vec<Vec<ZId>> {
    (0u8..16)
        .map(|t| word_for_theta([(t >> 3) & 1, (t >> 2) & 1, (t >> 1) & 1, t & 1]))
        .collect()
}

pub fn lowering_shift(z: ZId) -> (i64, i64) {
    match z {
        Z32 => (1, 1),
        Z42 => (1, -1),
        Z31 => (-1, 1),
        Z41 => (-1, -1),
        _ => (0, 0),
    }
}

/// Weight of `word · w` when `w` has weight `start`.
pub fn word_weight(start: Weight, word: &[ZId]) -> Weight {
    word.iter().fold(start, |w, &z| {
        let (da, db) = lowering_shift(z);
        w.shift(da, db)
    })
}

/// Every vertex of the path (including the end point) is dominant.
pub fn has_nonnegative_path(start: Weight, word: &[ZId]) -> bool {
    let mut w = start;
    for &z in word.iter().rev() {
        let (da, db) = lowering_shift(z);
        w = w.shift(da, db);
        if !w.is_dominant() {
            return false;
        }
    }
    true
}

/// One of the nine parameter regimes with its table of admissible words.
#[derive(Clone, Debug)]
pub struct AdmissibleTable {
    pub regime: &'static str,
    /// `(weight offset from [m,n], words)` in the order they are listed.
    pub rows: Vec<((i64, i64), Vec<Vec<ZId>>)>,
}

impl AdmissibleTable {
    pub fn words(&self) -> Vec<Vec<ZId>> {
        self.rows.iter().flat_map(|(_, ws)| ws.iter().cloned()).collect()
    }

    pub fn contains(&self, word: &[ZId]) -> bool {
        self.rows.iter().any(|(_, ws)| ws.iter().any(|w| w == word))
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|(_, ws)| ws.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

macro_rules! words {
    ($([$($z:ident)*]),* $(,)?) => { vec![$(vec![$($z),*]),*] };
}

/// The table of admissible words for `K⁺(m,n)`.
pub fn admissible_table(m: u32, n: u32) -> AdmissibleTable {
    let (regime, rows) = match (m, n) {
        (0, 0) => (
            "(0,0)",
            vec![
                ((0, 0), words![[], [Z41 Z31 Z42 Z32]]),
                ((1, 1), words![[Z32], [Z31 Z42 Z32]]),
                ((2, 0), words![[Z42 Z32]]),
                ((0, 2), words![[Z31 Z32]]),
            ],
        ),
        (1, 0) => (
            "(1,0)",
            vec![
                ((0, 0), words![[], [Z41 Z32], [Z41 Z31 Z42 Z32]]),
                ((1, 1), words![[Z32], [Z31 Z42 Z32]]),
                ((-1, 1), words![[Z31], [Z41 Z31 Z32]]),
                ((2, 0), words![[Z42 Z32]]),
                ((0, 2), words![[Z31 Z32]]),
            ],
        ),
        (0, 1) => (
            "(0,1)",
            vec![
                ((0, 0), words![[], [Z41 Z32], [Z41 Z31 Z42 Z32]]),
                ((1, 1), words![[Z32], [Z31 Z42 Z32]]),
                ((1, -1), words![[Z42], [Z41 Z42 Z32]]),
                ((2, 0), words![[Z42 Z32]]),
                ((0, 2), words![[Z31 Z32]]),
            ],
        ),
        (1, 1) => (
            "(1,1)",
            vec![
                ((0, 0), words![[], [Z41 Z31 Z42 Z32], [Z31 Z42], [Z41 Z32]]),
                ((1, 1), words![[Z32], [Z31 Z42 Z32]]),
                ((1, -1), words![[Z42], [Z41 Z42 Z32]]),
                ((-1, 1), words![[Z31], [Z41 Z31 Z32]]),
                ((-1, -1), words![[Z41], [Z41 Z31 Z42]]),
                ((2, 0), words![[Z42 Z32]]),
                ((0, 2), words![[Z31 Z32]]),
            ],
        ),
        (_, 0) => (
            "(m,0), m>=2",
            vec![
                ((0, 0), words![[], [Z41 Z32], [Z41 Z31 Z42 Z32]]),
                ((1, 1), words![[Z32], [Z31 Z42 Z32]]),
                ((-1, 1), words![[Z31], [Z41 Z31 Z32]]),
                ((2, 0), words![[Z42 Z32]]),
                ((0, 2), words![[Z31 Z32]]),
                ((-2, 0), words![[Z41 Z31]]),
            ],
        ),
        (0, _) => (
            "(0,n), n>=2",
            vec![
                ((0, 0), words![[], [Z41 Z32], [Z41 Z31 Z42 Z32]]),
                ((1, 1), words![[Z32], [Z31 Z42 Z32]]),
                ((1, -1), words![[Z42], [Z41 Z42 Z32]]),
                ((2, 0), words![[Z42 Z32]]),
                ((0, 2), words![[Z31 Z32]]),
                ((0, -2), words![[Z41 Z42]]),
            ],
        ),
        (_, 1) => (
            "(m,1), m>=2",
            vec![
                ((0, 0), words![[], [Z41 Z32], [Z31 Z42], [Z41 Z31 Z42 Z32]]),
                ((1, 1), words![[Z32], [Z31 Z42 Z32]]),
                ((1, -1), words![[Z42], [Z41 Z42 Z32]]),
                ((-1, 1), words![[Z31], [Z41 Z31 Z32]]),
                ((-1, -1), words![[Z41], [Z41 Z31 Z42]]),
                ((2, 0), words![[Z42 Z32]]),
                ((0, 2), words![[Z31 Z32]]),
                ((-2, 0), words![[Z41 Z31]]),
            ],
        ),
        (1, _) => (
            "(1,n), n>=2",
            vec![
                ((0, 0), words![[], [Z41 Z32], [Z31 Z42], [Z41 Z31 Z42 Z32]]),
                ((1, 1), words![[Z32], [Z31 Z42 Z32]]),
                ((1, -1), words![[Z42], [Z41 Z42 Z32]]),
                ((-1, 1), words![[Z31], [Z41 Z31 Z32]]),
                ((-1, -1), words![[Z41], [Z41 Z31 Z42]]),
                ((2, 0), words![[Z42 Z32]]),
                ((0, 2), words![[Z31 Z32]]),
                ((0, -2), words![[Z41 Z42]]),
            ],
        ),
        _ => (
            "(m,n), m,n>=2",
            vec![
                ((0, 0), words![[], [Z41 Z32], [Z31 Z42], [Z41 Z31 Z42 Z32]]),
                ((1, 1), words![[Z32], [Z31 Z42 Z32]]),
                ((1, -1), words![[Z42], [Z41 Z42 Z32]]),
                ((-1, 1), words![[Z31], [Z41 Z31 Z32]]),
                ((-1, -1), words![[Z41], [Z41 Z31 Z42]]),
                ((2, 0), words![[Z42 Z32]]),
                ((0, 2), words![[Z31 Z32]]),
                ((-2, 0), words![[Z41 Z31]]),
                ((0, -2), words![[Z41 Z42]]),
            ],
        ),
    };
    AdmissibleTable { regime, rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_count_to_the_kac_dimension() {
        for m in 0..5u32 {
            for n in 0..5u32 {
                let t = admissible_table(m, n);
                let total: usize = t
                    .rows
                    .iter()
                    .map(|((da, db), ws)| {
                        let w = Weight::new(m as i64 + da, n as i64 + db);
                        ws.len() * w.l0_dim()
                    })
                    .sum();
                assert_eq!(total, 16 * ((m + 1) * (n + 1)) as usize, "({m},{n}) {}", t.regime);
            }
        }
    }

    #[test]
    fn listed_offsets_match_word_weights() {
        for (m, n) in [(0, 0), (1, 0), (0, 1), (1, 1), (3, 0), (0, 3), (3, 1), (1, 3), (2, 2)] {
            let t = admissible_table(m, n);
            let start = Weight::new(m as i64, n as i64);
            for ((da, db), ws) in &t.rows {
                for w in ws {
                    assert_eq!(word_weight(start, w), start.shift(*da, *db));
                    assert!(has_nonnegative_path(start, w));
                }
            }
        }
    }

    #[test]
    fn path_rule_alone_admits_two_extra_words() {
        // the nonnegativity rule is necessary but the tables are smaller
        let extra = |m, n| {
            let t = admissible_table(m, n);
            all_words()
                .into_iter()
                .filter(|w| has_nonnegative_path(Weight::new(m as i64, n as i64), w) && !t.contains(w))
                .collect::<Vec<_>>()
        };
        assert_eq!(extra(0, 0), vec![vec![Z41, Z32]]);
        assert_eq!(extra(0, 1), vec![vec![Z31, Z42]]);
        assert!(extra(1, 0).is_empty());
        assert!(extra(2, 2).is_empty());
    }
}
