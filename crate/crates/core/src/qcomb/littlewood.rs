//! Littlewood-Richardson coefficients by direct tableau enumeration, and the
//! one-row induction rule with its interlacing condition.

use super::partition::Partition;
use crate::error::{Error, Result};

/// Interlacing condition for a one-row second factor:
/// `γ_{i+1} ≤ α_i ≤ γ_i` for all `i`, i.e. `γ/α` is a horizontal strip.
pub fn interlaces(alpha: &Partition, gamma: &Partition) -> bool {
    if !gamma.contains(alpha) {
        return false;
    }
    (0..gamma.len()).all(|i| gamma.part(i + 1) <= alpha.part(i))
}

/// Multiplicity question for inducing with a one-row factor of size `m`:
/// returns `None` when `γ_1 < m`; the unique partner `(γ_2, …, γ_r)` when
/// `γ_1 = m`; otherwise some witness `α` interlacing `γ` with `|α| = |γ| − m`.
pub fn young_row_rule(gamma: &Partition, m: u32) -> Option<Partition> {
    if gamma.first_part() < m {
        return None;
    }
    if gamma.first_part() == m {
        return Some(gamma.without_first_row());
    }
    // Greedy witness: peel m cells off the horizontal strip from the top row.
    let mut rest = m;
    let mut parts = Vec::with_capacity(gamma.len());
    for i in 0..gamma.len() {
        let room = gamma.part(i) - gamma.part(i + 1);
        let take = rest.min(room);
        parts.push(gamma.part(i) - take);
        rest -= take;
    }
    debug_assert_eq!(rest, 0);
    let alpha = Partition::new(parts.into_iter().filter(|&p| p > 0).collect())
        .expect("greedy strip removal yields a valid partition");
    debug_assert!(interlaces(&alpha, gamma));
    Some(alpha)
}

/// Littlewood-Richardson coefficient `a_{αβλ}`: the number of LR skew
/// tableaux of shape `λ/α` and weight `β`. Errors when `|α| + |β| ≠ |λ|`.
pub fn lr_coefficient(alpha: &Partition, beta: &Partition, lambda: &Partition) -> Result<u64> {
    if alpha.size() + beta.size() != lambda.size() {
        return Err(Error::InvalidInput(format!(
            "size mismatch: |{}| + |{}| != |{}|",
            alpha, beta, lambda
        )));
    }
    if !lambda.contains(alpha) {
        return Ok(0);
    }
    let rows = lambda.len();
    let mut filling: Vec<Vec<u32>> = (0..rows)
        .map(|i| vec![0; (lambda.part(i) - alpha.part(i)) as usize])
        .collect();
    let mut weight_left: Vec<u32> = (0..beta.len()).map(|i| beta.part(i)).collect();
    // Cells in reverse reading order: top to bottom, right to left within a
    // row. Filling in this order makes the lattice condition checkable
    // incrementally.
    let mut cells = Vec::new();
    for i in 0..rows {
        let a = alpha.part(i) as usize;
        let l = lambda.part(i) as usize;
        for j in (a..l).rev() {
            cells.push((i, j));
        }
    }
    let mut count = 0u64;
    fill(
        &mut filling,
        &cells,
        0,
        alpha,
        &mut weight_left,
        &mut vec![0u32; beta.len()],
        &mut count,
    );
    Ok(count)
}

fn fill(
    filling: &mut [Vec<u32>],
    cells: &[(usize, usize)],
    pos: usize,
    alpha: &Partition,
    weight_left: &mut [u32],
    seen: &mut [u32],
    count: &mut u64,
) {
    if pos == cells.len() {
        *count += 1;
        return;
    }
    let (i, j) = cells[pos];
    let off = alpha.part(i) as usize;
    for entry in 0..weight_left.len() as u32 {
        if weight_left[entry as usize] == 0 {
            continue;
        }
        // Lattice word: after placing, every prefix of the reverse reading
        // word must contain at least as many e's as (e+1)'s.
        if entry > 0 && seen[entry as usize] + 1 > seen[entry as usize - 1] {
            continue;
        }
        // Rows weakly increase left to right: the cell to the right is filled
        // earlier (same row, larger j).
        if j + 1 - off < filling[i].len() && filling[i][j + 1 - off] < entry + 1 {
            continue;
        }
        // Columns strictly increase top to bottom: cell above is (i-1, j).
        if i > 0 {
            let off_up = alpha.part(i - 1) as usize;
            if j < off_up {
                // Cell above is inside α, nothing to compare.
            } else if j - off_up < filling[i - 1].len() {
                if filling[i - 1][j - off_up] >= entry + 1 {
                    continue;
                }
            } else {
                // Cell above is outside λ: cannot happen for valid shapes.
                continue;
            }
        }
        filling[i][j - off] = entry + 1;
        weight_left[entry as usize] -= 1;
        seen[entry as usize] += 1;
        fill(filling, cells, pos + 1, alpha, weight_left, seen, count);
        seen[entry as usize] -= 1;
        weight_left[entry as usize] += 1;
        filling[i][j - off] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcomb::partitions_of;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn pieri_case() {
        assert_eq!(lr_coefficient(&pt(&[1]), &pt(&[1]), &pt(&[2])).unwrap(), 1);
        assert_eq!(
            lr_coefficient(&pt(&[1]), &pt(&[1]), &pt(&[1, 1])).unwrap(),
            1
        );
    }

    #[test]
    fn multiplicity_two_case() {
        // Brute-force LR tableau enumeration gives 2 here.
        assert_eq!(
            lr_coefficient(&pt(&[2, 1]), &pt(&[2, 1]), &pt(&[3, 2, 1])).unwrap(),
            2
        );
    }

    #[test]
    fn size_mismatch_rejected() {
        assert!(lr_coefficient(&pt(&[1]), &pt(&[1]), &pt(&[3])).is_err());
    }

    #[test]
    fn row_rule_cases() {
        let g = pt(&[3, 1]);
        assert_eq!(young_row_rule(&g, 4), None);
        assert_eq!(young_row_rule(&g, 3), Some(pt(&[1])));
        let w = young_row_rule(&g, 2).unwrap();
        assert_eq!(w.size(), 2);
        assert!(interlaces(&w, &g));
    }

    #[test]
    fn row_rule_multiplicity_matches_lr() {
        // For a one-row second factor, the LR coefficient is 1 exactly when
        // the interlacing condition holds, over all γ ⊢ n ≤ 10.
        for n in 1..=10u32 {
            for gamma in partitions_of(n) {
                for m in 1..=n {
                    for alpha in partitions_of(n - m) {
                        let lr = lr_coefficient(&alpha, &Partition::row(m), &gamma).unwrap();
                        let expected = u64::from(interlaces(&alpha, &gamma));
                        assert_eq!(lr, expected, "alpha={} m={} gamma={}", alpha, m, gamma);
                    }
                }
            }
        }
    }
}
