//! Properly filled horizontal strips in the Young diagram `Y_ā` and the
//! sign-reversing involution `ψ` on them.
//!
//! Columns are indexed from 0 (leftmost) to `n - 1`; column `i` has height
//! `a_{n-i}` (1-based `ā`), so heights are non-increasing left to right.
//! Rows are numbered from 1 at the top. A strip stores, per column, the row
//! of its unique cell and the number written there.
//!
//! A strip is valid when rows are weakly rising left to right
//! (`r_i ≥ r_{i+1}`), every cell lies inside its column, the numbers form a
//! permutation of `1..=n`, and every row reads increasing if its index is
//! odd and decreasing if it is even.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::combinatorics::{beta, descent_set, subset_of_avector, AVector, DescentSet};
use crate::parking::{parking_sequences, sum_enumerator, AParkingFunction};
use crate::{Cap, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Up,
    Down,
}

impl Direction {
    pub fn opposite(self) -> Direction {
        match self {
            Direction::Up => Direction::Down,
            Direction::Down => Direction::Up,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Up => "up",
            Direction::Down => "down",
        })
    }
}

/// The Young diagram with column lengths `a_n, …, a_1` from left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungDiagram {
    bound: AVector,
}

impl YoungDiagram {
    pub fn new(bound: AVector) -> Self {
        YoungDiagram { bound }
    }

    pub fn bound(&self) -> &AVector {
        &self.bound
    }

    pub fn columns(&self) -> usize {
        self.bound.len()
    }

    pub fn height(&self, column: usize) -> u32 {
        let e = self.bound.entries();
        e[e.len() - 1 - column]
    }

    pub fn column_heights(&self) -> Vec<u32> {
        self.bound.entries().iter().rev().copied().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FilledStrip {
    bound: AVector,
    rows: Vec<u32>,
    fill: Vec<u32>,
}

impl FilledStrip {
    pub fn new(bound: AVector, rows: Vec<u32>, fill: Vec<u32>) -> Result<Self> {
        let strip = FilledStrip { bound, rows, fill };
        strip.validate().map_err(Error::InvalidStrip)?;
        Ok(strip)
    }

    fn validate(&self) -> std::result::Result<(), String> {
        let n = self.bound.len();
        if self.rows.len() != n || self.fill.len() != n {
            return Err(format!("expected {n} columns"));
        }
        let mut seen = vec![false; n + 1];
        for &v in &self.fill {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(format!("fill {:?} is not a permutation", self.fill));
            }
            seen[v as usize] = true;
        }
        for i in 0..n {
            let r = self.rows[i];
            if r == 0 || r > self.height(i) {
                return Err(format!("column {} row {r} outside the diagram", i + 1));
            }
            if i + 1 < n {
                let r_next = self.rows[i + 1];
                if r < r_next {
                    return Err(format!("column {} is above column {}", i + 1, i + 2));
                }
                if r == r_next && !in_row_order(r, self.fill[i], self.fill[i + 1]) {
                    return Err(format!("row {r} is not properly ordered"));
                }
            }
        }
        Ok(())
    }

    pub fn bound(&self) -> &AVector {
        &self.bound
    }

    pub fn diagram(&self) -> YoungDiagram {
        YoungDiagram::new(self.bound.clone())
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn fill(&self) -> &[u32] {
        &self.fill
    }

    pub fn columns(&self) -> usize {
        self.rows.len()
    }

    fn height(&self, column: usize) -> u32 {
        let e = self.bound.entries();
        e[e.len() - 1 - column]
    }

    /// `ε_i = sgn(σ_i − σ_{i+1}) · (−1)^{r(σ_i)}` with a virtual `σ_{n+1} = n+1`;
    /// `Up` when `ε_i = −1`.
    pub fn assigned_direction(&self, column: usize) -> Direction {
        let n = self.columns();
        let here = self.fill[column];
        let next = if column + 1 < n {
            self.fill[column + 1]
        } else {
            n as u32 + 1
        };
        let descending = here > next;
        let even_row = self.rows[column].is_multiple_of(2);
        if descending == even_row {
            Direction::Down
        } else {
            Direction::Up
        }
    }

    // Moving down changes only row r+1: the cell must stay in the column,
    // keep the strip rising, and fit the order of a left neighbour in row r+1.
    fn can_move_down(&self, i: usize) -> bool {
        let r = self.rows[i];
        if r + 1 > self.height(i) {
            return false;
        }
        if i > 0 {
            let left = self.rows[i - 1];
            if left == r {
                return false;
            }
            if left == r + 1 && !in_row_order(r + 1, self.fill[i - 1], self.fill[i]) {
                return false;
            }
        }
        true
    }

    fn can_move_up(&self, i: usize) -> std::result::Result<(), String> {
        let r = self.rows[i];
        if r == 1 {
            return Err("cell is in the top row".into());
        }
        if i + 1 < self.columns() {
            let right = self.rows[i + 1];
            if right == r {
                return Err("cell has a neighbour to its right".into());
            }
            if right == r - 1 && !in_row_order(r - 1, self.fill[i], self.fill[i + 1]) {
                return Err(format!("row {} would be out of order", r - 1));
            }
        }
        Ok(())
    }

    /// The direction in which the cell of `column` is moveable, if any.
    ///
    /// Up-moves are granted on the assigned direction alone; [`FilledStrip::psi`]
    /// re-checks the moved strip.
    pub fn moveable(&self, column: usize) -> Option<Direction> {
        match self.assigned_direction(column) {
            Direction::Up => Some(Direction::Up),
            Direction::Down if self.can_move_down(column) => Some(Direction::Down),
            Direction::Down => None,
        }
    }

    pub fn moveable_cells(&self) -> Vec<Option<Direction>> {
        (0..self.columns()).map(|i| self.moveable(i)).collect()
    }

    pub fn is_fixed_point(&self) -> bool {
        (0..self.columns()).all(|i| self.moveable(i).is_none())
    }

    /// Move the cell of `column` one row in `direction`, validating the result.
    pub fn moved(&self, column: usize, direction: Direction) -> Result<FilledStrip> {
        let mut rows = self.rows.clone();
        match direction {
            Direction::Down => {
                if !self.can_move_down(column) {
                    return Err(Error::InvalidStrip(format!(
                        "column {} cannot move down",
                        column + 1
                    )));
                }
                rows[column] += 1;
            }
            Direction::Up => {
                self.can_move_up(column)
                    .map_err(|reason| Error::UpMoveInvalid {
                        column: column + 1,
                        reason,
                    })?;
                rows[column] -= 1;
            }
        }
        let out = FilledStrip {
            bound: self.bound.clone(),
            rows,
            fill: self.fill.clone(),
        };
        out.validate().map_err(|reason| match direction {
            Direction::Up => Error::UpMoveInvalid {
                column: column + 1,
                reason,
            },
            Direction::Down => Error::InvalidStrip(reason),
        })?;
        Ok(out)
    }

    /// Rightmost moveable cell and its direction.
    pub fn rightmost_moveable(&self) -> Option<(usize, Direction)> {
        (0..self.columns())
            .rev()
            .find_map(|i| self.moveable(i).map(|d| (i, d)))
    }

    /// `ψ(H)`: move the rightmost moveable cell one row in its assigned
    /// direction. Fixed points are an error.
    pub fn psi(&self) -> Result<FilledStrip> {
        let (column, direction) = self.rightmost_moveable().ok_or(Error::FixedPoint)?;
        self.moved(column, direction)
    }

    /// `Σ_i (r_i − 1)`: cells of the diagram lying above the strip.
    pub fn s_statistic(&self) -> u64 {
        self.rows.iter().map(|&r| r as u64 - 1).sum()
    }

    /// The word `σ_n … σ_2 σ_1`.
    pub fn reversed_word(&self) -> Vec<usize> {
        self.fill.iter().rev().map(|&v| v as usize).collect()
    }

    /// ASCII picture of the diagram: numbers for strip cells, `.` for the
    /// remaining cells, rows from the top.
    pub fn render(&self) -> String {
        let n = self.columns();
        let width = n.to_string().len() + 1;
        let top = self.height(0);
        let mut out = String::new();
        for r in 1..=top {
            let mut line = String::new();
            for i in 0..n {
                if self.height(i) < r {
                    break;
                }
                let cell = if self.rows[i] == r {
                    self.fill[i].to_string()
                } else {
                    ".".to_string()
                };
                line.push_str(&format!("{cell:>width$}"));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for FilledStrip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rows={:?} fill={:?}", self.rows, self.fill)
    }
}

fn in_row_order(row: u32, left: u32, right: u32) -> bool {
    if row % 2 == 1 {
        left < right
    } else {
        left > right
    }
}

/// `H(b)`: for `j = 1, 2, …` the indices `i` with `b_i = j` go into row `j`,
/// in the next free columns from the right, increasing for odd `j` and
/// decreasing for even `j`.
pub fn strip_of_parking(b: &AParkingFunction) -> FilledStrip {
    let n = b.len();
    let max = b.bound().max_level();
    let mut levels: Vec<Vec<u32>> = vec![Vec::new(); max as usize + 1];
    for (i, &v) in b.values().iter().enumerate() {
        levels[v as usize].push(i as u32 + 1);
    }
    let mut rows = vec![0u32; n];
    let mut fill = vec![0u32; n];
    let mut end = n;
    for (j, idx) in levels.iter_mut().enumerate().skip(1) {
        if idx.is_empty() {
            continue;
        }
        if j % 2 == 0 {
            idx.reverse();
        }
        let start = end - idx.len();
        for (offset, &v) in idx.iter().enumerate() {
            rows[start + offset] = j as u32;
            fill[start + offset] = v;
        }
        end = start;
    }
    let strip = FilledStrip {
        bound: b.bound().clone(),
        rows,
        fill,
    };
    debug_assert!(strip.validate().is_ok(), "H(b) must fit into the diagram");
    strip
}

/// Inverse of [`strip_of_parking`]: `b_m` is the row of the cell holding `m`.
pub fn parking_of_strip(strip: &FilledStrip) -> AParkingFunction {
    let mut values = vec![0u32; strip.columns()];
    for (i, &v) in strip.fill.iter().enumerate() {
        values[v as usize - 1] = strip.rows[i];
    }
    AParkingFunction::new(values, strip.bound.clone())
        .expect("a valid strip encodes a parking function")
}

/// Every properly filled strip in `Y_ā`, via the bijection with `P_ā`.
pub fn all_strips(a: &AVector, cap: Cap) -> Result<impl Iterator<Item = FilledStrip> + '_> {
    Ok(parking_sequences(a, cap)?
        .map(move |v| strip_of_parking(&AParkingFunction::new_unchecked(v, a.clone()))))
}

/// Strips with no moveable cell.
pub fn fixed_points(a: &AVector, cap: Cap) -> Result<impl Iterator<Item = FilledStrip> + '_> {
    Ok(all_strips(a, cap)?.filter(FilledStrip::is_fixed_point))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureKind {
    BijectionRoundTrip,
    InvalidStrip,
    NotAnInvolution,
    StatisticJump,
    SameSign,
    MoveabilityChanged,
    PsiError,
    FixedPointForEvenFirstEntry,
    FixedPointNotAtBottom,
    FixedPointDescentSet,
    FixedPointStatistic,
    FixedPointCount,
    SignedSum,
    EnumeratorMismatch,
}

/// A failed check together with the strip that exposed it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionFailure {
    pub kind: FailureKind,
    pub detail: String,
    pub witness: Option<FilledStrip>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionReport {
    pub bound: AVector,
    pub subset: DescentSet,
    pub strips: usize,
    pub fixed_points: usize,
    pub pairs: usize,
    pub signed_sum: BigInt,
    pub predicted: BigInt,
    pub beta: BigUint,
    pub failures: Vec<InvolutionFailure>,
}

impl InvolutionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

const MAX_RECORDED_FAILURES: usize = 16;

/// Enumerate `H_ā`, apply `ψ` to every non-fixed strip and check that the
/// fixed points account for `I_ā(−1)`.
pub fn verify_involution_theorem(a: &AVector, cap: Cap) -> Result<InvolutionReport> {
    cap.check(a.len())?;
    let n = a.len();
    let subset = subset_of_avector(a);
    let beta_value = beta(&subset);
    let a1_odd = a.entries()[0] % 2 == 1;
    let bottom_s = a.sum() - n as u64;
    let predicted = if a1_odd {
        let b = BigInt::from(beta_value.clone());
        if bottom_s.is_multiple_of(2) {
            b
        } else {
            -b
        }
    } else {
        BigInt::zero()
    };

    let mut failures = Vec::new();
    let mut fail = |kind, detail: String, witness: Option<&FilledStrip>| {
        if failures.len() < MAX_RECORDED_FAILURES {
            failures.push(InvolutionFailure {
                kind,
                detail,
                witness: witness.cloned(),
            });
        }
    };
    let mut strips = 0usize;
    let mut fixed = 0usize;
    let mut moved = 0usize;
    let mut signed_sum = BigInt::zero();

    for values in parking_sequences(a, cap)? {
        let b = AParkingFunction::new_unchecked(values, a.clone());
        let h = strip_of_parking(&b);
        strips += 1;
        if let Err(e) = h.validate() {
            fail(FailureKind::InvalidStrip, e, Some(&h));
            continue;
        }
        if parking_of_strip(&h) != b {
            fail(
                FailureKind::BijectionRoundTrip,
                format!("b={:?}", b.values()),
                Some(&h),
            );
        }
        let s = h.s_statistic();
        if s != b.sum_statistic() {
            fail(
                FailureKind::StatisticJump,
                "s(H) differs from s(b)".into(),
                Some(&h),
            );
        }
        if s.is_multiple_of(2) {
            signed_sum += 1;
        } else {
            signed_sum -= 1;
        }

        let cells = h.moveable_cells();
        let Some(column) = cells.iter().rposition(Option::is_some) else {
            fixed += 1;
            check_fixed_point(&h, a1_odd, &subset, bottom_s, &mut fail);
            continue;
        };
        moved += 1;
        let image = match h.psi() {
            Ok(image) => image,
            Err(e) => {
                fail(FailureKind::PsiError, e.to_string(), Some(&h));
                continue;
            }
        };
        let s2 = image.s_statistic();
        if s.abs_diff(s2) != 1 {
            fail(
                FailureKind::StatisticJump,
                format!("s went from {s} to {s2}"),
                Some(&h),
            );
        }
        if s % 2 == s2 % 2 {
            fail(
                FailureKind::SameSign,
                "ψ(H) has the sign of H".into(),
                Some(&h),
            );
        }
        let image_cells = image.moveable_cells();
        for (i, (before, after)) in cells.iter().zip(&image_cells).enumerate() {
            let expected = if i == column {
                before.map(Direction::opposite)
            } else {
                *before
            };
            if *after != expected {
                fail(
                    FailureKind::MoveabilityChanged,
                    format!("column {}: {before:?} became {after:?}", i + 1),
                    Some(&h),
                );
                break;
            }
        }
        match image.psi() {
            Ok(back) if back == h => {}
            Ok(back) => fail(
                FailureKind::NotAnInvolution,
                format!("ψ(ψ(H)) = {back}"),
                Some(&h),
            ),
            Err(e) => fail(FailureKind::PsiError, format!("on ψ(H): {e}"), Some(&h)),
        }
    }

    let expected_fixed = if a1_odd {
        beta_value.clone()
    } else {
        BigUint::zero()
    };
    if BigUint::from(fixed) != expected_fixed {
        fail(
            FailureKind::FixedPointCount,
            format!("{fixed} fixed points, expected {expected_fixed}"),
            None,
        );
    }
    if signed_sum != predicted {
        fail(
            FailureKind::SignedSum,
            format!("Σ(−1)^s = {signed_sum}, expected {predicted}"),
            None,
        );
    }
    let from_enumerator = sum_enumerator(a, cap)?.eval_at_minus_one();
    if from_enumerator != signed_sum {
        fail(
            FailureKind::EnumeratorMismatch,
            format!("I_ā(−1) = {from_enumerator} but strips give {signed_sum}"),
            None,
        );
    }

    Ok(InvolutionReport {
        bound: a.clone(),
        subset,
        strips,
        fixed_points: fixed,
        pairs: moved / 2,
        signed_sum,
        predicted,
        beta: beta_value,
        failures,
    })
}

fn check_fixed_point(
    h: &FilledStrip,
    a1_odd: bool,
    subset: &DescentSet,
    bottom_s: u64,
    fail: &mut impl FnMut(FailureKind, String, Option<&FilledStrip>),
) {
    if !a1_odd {
        fail(
            FailureKind::FixedPointForEvenFirstEntry,
            "a_1 is even but no cell is moveable".into(),
            Some(h),
        );
        return;
    }
    if (0..h.columns()).any(|i| h.rows[i] != h.height(i)) {
        fail(FailureKind::FixedPointNotAtBottom, String::new(), Some(h));
    }
    let word = h.reversed_word();
    match descent_set(&word) {
        Ok(d) if d == *subset => {}
        Ok(d) => fail(
            FailureKind::FixedPointDescentSet,
            format!("descent set {d}, expected {subset}"),
            Some(h),
        ),
        Err(e) => fail(FailureKind::FixedPointDescentSet, e.to_string(), Some(h)),
    }
    if h.s_statistic() != bottom_s {
        fail(FailureKind::FixedPointStatistic, String::new(), Some(h));
    }
}

/// Convenience: `1` for even `s`, `-1` for odd.
pub fn sign_of(strip: &FilledStrip) -> BigInt {
    if strip.s_statistic().is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn av(e: &[u32]) -> AVector {
        AVector::new(e.to_vec()).unwrap()
    }

    fn seven_column_strip() -> FilledStrip {
        let a = av(&[3, 3, 6, 7, 7, 7, 8]);
        strip_of_parking(&AParkingFunction::new(vec![5, 7, 2, 5, 1, 5, 2], a).unwrap())
    }

    #[test]
    fn diagram_heights() {
        let y = YoungDiagram::new(av(&[3, 3, 6, 7, 7, 7, 8]));
        assert_eq!(y.column_heights(), vec![8, 7, 7, 7, 6, 3, 3]);
    }

    #[test]
    fn seven_column_construction() {
        let h = seven_column_strip();
        assert_eq!(h.rows(), &[7, 5, 5, 5, 2, 2, 1]);
        assert_eq!(h.fill(), &[2, 1, 4, 6, 7, 3, 5]);
        assert_eq!(h.s_statistic(), 20);
        assert_eq!(parking_of_strip(&h).values(), &[5, 7, 2, 5, 1, 5, 2]);
    }

    #[test]
    fn small_constructions() {
        let a = av(&[2, 2, 2]);
        let h = strip_of_parking(&AParkingFunction::new(vec![1, 1, 1], a).unwrap());
        assert_eq!(h.rows(), &[1, 1, 1]);
        assert_eq!(h.fill(), &[1, 2, 3]);
        assert_eq!(h.s_statistic(), 0);
        assert_eq!(parking_of_strip(&h).values(), &[1, 1, 1]);

        let h = strip_of_parking(&AParkingFunction::new(vec![1, 2], av(&[1, 2])).unwrap());
        assert_eq!(h.rows(), &[2, 1]);
        assert_eq!(h.fill(), &[2, 1]);
        assert_eq!(h.s_statistic(), 1);
        let direct = FilledStrip::new(av(&[1, 2]), vec![2, 1], vec![2, 1]).unwrap();
        assert_eq!(parking_of_strip(&direct).values(), &[1, 2]);
    }

    #[test]
    fn invalid_strips_rejected() {
        let a = av(&[2, 2]);
        // rows must weakly rise to the right
        assert!(FilledStrip::new(a.clone(), vec![1, 2], vec![1, 2]).is_err());
        // row 1 must increase
        assert!(FilledStrip::new(a.clone(), vec![1, 1], vec![2, 1]).is_err());
        // row 2 must decrease
        assert!(FilledStrip::new(a.clone(), vec![2, 2], vec![1, 2]).is_err());
        // outside the column
        assert!(FilledStrip::new(a.clone(), vec![3, 1], vec![1, 2]).is_err());
        assert!(FilledStrip::new(a, vec![1, 1], vec![1, 1]).is_err());
    }

    #[test]
    fn seven_column_directions() {
        let h = seven_column_strip();
        // σ_7 = 5 next to the virtual 8: down, but row 2 would read 7, 3, 5.
        assert_eq!(h.assigned_direction(6), Direction::Down);
        assert_eq!(h.moveable(6), None);
        // σ_3 = 4 and σ_4 = 6: down, but moving them breaks the strip.
        assert_eq!(h.assigned_direction(2), Direction::Down);
        assert_eq!(h.moveable(2), None);
        assert_eq!(h.assigned_direction(3), Direction::Down);
        assert_eq!(h.moveable(3), None);
        // σ_5 = 7 above 3 in even row 2: down, and row 3 is free.
        assert_eq!(h.moveable(4), Some(Direction::Down));
        // σ_6 = 3 before 5 in even row 2: ε = (−1)(+1) = −1.
        assert_eq!(h.assigned_direction(5), Direction::Up);
        assert_eq!(h.moveable(5), Some(Direction::Up));
        assert!(h.moved(5, Direction::Up).is_ok());
        assert_eq!(h.rightmost_moveable(), Some((5, Direction::Up)));
        // σ_1 = 2 before 1 in odd row 7 may rise to row 6.
        assert_eq!(h.moveable(0), Some(Direction::Up));
        assert!(h.moved(0, Direction::Up).is_ok());
        // σ_2 = 1 before 4 in odd row 5 drops into the empty row 6.
        assert_eq!(h.moveable(1), Some(Direction::Down));
    }

    #[test]
    fn seven_column_psi_round_trip() {
        let h = seven_column_strip();
        let (col, dir) = h.rightmost_moveable().unwrap();
        let image = h.psi().unwrap();
        assert_eq!(image.fill(), h.fill());
        assert_eq!(h.s_statistic().abs_diff(image.s_statistic()), 1);
        assert_eq!(image.moveable(col), Some(dir.opposite()));
        assert_eq!(image.psi().unwrap(), h);
    }

    #[test]
    fn last_column_in_top_row_is_down() {
        for n in 1..=5 {
            let a = AVector::classical(n);
            for h in all_strips(&a, Cap::default()).unwrap() {
                if h.rows()[n - 1] == 1 {
                    assert_eq!(h.assigned_direction(n - 1), Direction::Down);
                }
            }
        }
    }

    #[test]
    fn psi_on_single_row() {
        // n = 1: the only cell moves down.
        let h = FilledStrip::new(av(&[2]), vec![1], vec![1]).unwrap();
        let image = h.psi().unwrap();
        assert_eq!(image.rows(), &[2]);
        assert_eq!(image.psi().unwrap(), h);
        // n = 2: σ_2 is blocked by σ_1, so σ_1 moves.
        let h = FilledStrip::new(av(&[2, 2]), vec![1, 1], vec![1, 2]).unwrap();
        assert_eq!(h.moveable(1), None);
        let image = h.psi().unwrap();
        assert_eq!(image.rows(), &[2, 1]);
        assert_eq!(image.psi().unwrap(), h);
    }

    #[test]
    fn psi_on_fixed_point_is_an_error() {
        let h = FilledStrip::new(av(&[1]), vec![1], vec![1]).unwrap();
        assert!(h.is_fixed_point());
        assert_eq!(h.psi(), Err(Error::FixedPoint));
    }

    #[test]
    fn fixed_point_examples() {
        assert_eq!(
            fixed_points(&av(&[2, 2]), Cap::default()).unwrap().count(),
            0
        );
        let ones: Vec<_> = fixed_points(&av(&[1, 1, 1, 1]), Cap::default())
            .unwrap()
            .collect();
        assert_eq!(ones.len(), 1);
        assert_eq!(ones[0].rows(), &[1, 1, 1, 1]);
        assert_eq!(ones[0].fill(), &[1, 2, 3, 4]);
        let fp: Vec<_> = fixed_points(&AVector::classical(4), Cap::default())
            .unwrap()
            .collect();
        assert_eq!(fp.len(), 5);
        for h in fp {
            assert_eq!(h.rows(), &[4, 3, 2, 1]);
            assert_eq!(descent_set(&h.reversed_word()).unwrap().members(), &[2]);
        }
    }

    #[test]
    fn verification_examples() {
        let r = verify_involution_theorem(&AVector::classical(4), Cap::default()).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.signed_sum, BigInt::from(5));
        assert_eq!(r.fixed_points, 5);
        assert_eq!(r.pairs * 2 + 5, 125);

        let r = verify_involution_theorem(&av(&[2, 2]), Cap::default()).unwrap();
        assert!(r.passed());
        assert_eq!(r.signed_sum, BigInt::zero());

        let r = verify_involution_theorem(&av(&[1]), Cap::default()).unwrap();
        assert!(r.passed());
        assert_eq!(r.signed_sum, BigInt::one());
        assert_eq!((r.fixed_points, r.pairs), (1, 0));

        let r = verify_involution_theorem(&av(&[3, 3, 6, 7, 7, 7, 8]), Cap(7)).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn bijection_exhaustive_small() {
        for a in [
            av(&[1, 2, 3, 4, 5]),
            av(&[2, 3, 3, 5, 6]),
            av(&[1, 1, 4, 4]),
        ] {
            let mut seen = std::collections::HashSet::new();
            for values in parking_sequences(&a, Cap::default()).unwrap() {
                let b = AParkingFunction::new(values, a.clone()).unwrap();
                let h = strip_of_parking(&b);
                assert!(FilledStrip::new(a.clone(), h.rows().to_vec(), h.fill().to_vec()).is_ok());
                assert_eq!(parking_of_strip(&h), b);
                assert_eq!(h.s_statistic(), b.sum_statistic());
                assert!(seen.insert(h));
            }
        }
    }

    #[test]
    fn render_small() {
        let h = FilledStrip::new(av(&[1, 2]), vec![2, 1], vec![2, 1]).unwrap();
        assert_eq!(h.render(), " . 1\n 2\n");
    }
}
