use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::error::{bail, Error, Result};

/// A filling of a Young diagram by `1..=n`, increasing along rows and down
/// columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &v in rows.iter().flatten() {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                bail!(Usage, "tableau entries must be 1..={n} without repeats");
            }
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if j > 0 && row[j - 1] >= v {
                    bail!(Usage, "row {} is not increasing", i + 1);
                }
                if i > 0 && rows[i - 1][j] >= v {
                    bail!(Usage, "column {} is not increasing", j + 1);
                }
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_sorted(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// The tableau filled row by row with `1..=n`.
    pub fn initial(shape: &Partition) -> Self {
        let mut next = 0;
        let rows = shape
            .parts()
            .iter()
            .map(|&l| {
                next += l;
                (next - l + 1..=next).collect()
            })
            .collect();
        StandardTableau { rows }
    }

    /// Entries in row-major order. As a 0-based permutation this is the `w`
    /// with `w · t^λ = T`, where `t^λ` is [`StandardTableau::initial`].
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().map(|&v| v - 1).collect()
    }

    /// Row index of each entry, indexed by `entry - 1`.
    pub fn row_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.size()];
        for (i, row) in self.rows.iter().enumerate() {
            for &v in row {
                out[v - 1] = i;
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let shape = self.shape().transpose();
        let rows = (0..shape.len()).map(|j| (0..shape.part(j)).map(|i| self.rows[i][j]).collect()).collect();
        StandardTableau { rows }
    }
}

impl TryFrom<Vec<Vec<usize>>> for StandardTableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        StandardTableau::new(rows)
    }
}

impl From<StandardTableau> for Vec<Vec<usize>> {
    fn from(t: StandardTableau) -> Self {
        t.rows
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "[{}]", rows.join(" | "))
    }
}

/// All standard tableaux of shape `λ`, sorted by reading word; the first
/// one is the row-reading tableau.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    place(shape, 1, &mut rows, &mut out);
    out.sort_by_key(StandardTableau::reading_word);
    out
}

fn place(shape: &Partition, next: usize, rows: &mut [Vec<usize>], out: &mut Vec<StandardTableau>) {
    if next > shape.size() {
        out.push(StandardTableau { rows: rows.to_vec() });
        return;
    }
    for i in 0..rows.len() {
        let len = rows[i].len();
        let fits_row = len < shape.part(i);
        let fits_column = i == 0 || rows[i - 1].len() > len;
        if fits_row && fits_column {
            rows[i].push(next);
            place(shape, next + 1, rows, out);
            rows[i].pop();
        }
    }
}

/// Number of standard tableaux by the hook length formula.
pub fn count_standard_tableaux(shape: &Partition) -> usize {
    let factorial: u128 = (1..=shape.size() as u128).product();
    let hooks: u128 = shape.boxes().map(|(i, j)| shape.hook_length(i, j) as u128).product();
    (factorial / hooks) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(standard_tableaux(&p(&[4])).len(), 1);
        assert_eq!(standard_tableaux(&p(&[2, 1])).len(), 2);
        assert_eq!(standard_tableaux(&p(&[2, 2])).len(), 2);
        for n in 0..=7 {
            for lam in Partition::all_of_size(n) {
                assert_eq!(standard_tableaux(&lam).len(), count_standard_tableaux(&lam));
            }
        }
    }

    #[test]
    fn first_is_initial() {
        let lam = p(&[3, 2]);
        assert_eq!(standard_tableaux(&lam)[0], StandardTableau::initial(&lam));
        assert_eq!(StandardTableau::initial(&lam).reading_word(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn validation_and_json() {
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2]]).is_ok());
        assert!(StandardTableau::new(vec![vec![2, 3], vec![1]]).is_err());
        let t: StandardTableau = serde_json::from_str("[[1,2],[3]]").unwrap();
        assert_eq!(serde_json::to_string(&t.transpose()).unwrap(), "[[1,3],[2]]");
    }
}
