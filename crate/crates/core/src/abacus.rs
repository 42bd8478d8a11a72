//! Balanced flush abacus diagrams on `2n` columns.
//!
//! Positions are labelled `column + 2n·row` with `column` in `[1, 2n]`, which
//! linearly orders the array ("reading order"). Column `j` is dual to column
//! `2n + 1 - j`, and window `k` is the run of positions `(k-1)n + 1 ..= kn`.
//!
//! A diagram is stored only as its `n` defining beads `b₁ < ... < bₙ`. The
//! full bead set is computed: in the column of `bᵢ` every position `<= bᵢ` is
//! a bead, and in the dual column every position `<= 1 - 2n - bᵢ` is a bead.
//! Both columns carry class `i`. Flush and balanced then hold by construction.
//!
//! The constructions here connect three families:
//!
//! * [`encode`] / [`decode`]: lecture hall partitions ↔ abaci, where `λᵢ`
//!   counts the positive positions `<= bᵢ` whose class is at most `i`.
//! * [`to_bounded`] / [`from_bounded`]: abaci ↔ bounded partitions, where each
//!   positive bead in window 1 is a small part and every later positive bead
//!   `ḃ` contributes `1 + #gaps strictly between ḃ - 2n and ḃ`.
//! * [`append_bead`]: drops a bead directly below `bᵢ`, which adds `n + i` to
//!   both weights.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{BoundedPartition, LectureHallPartition, PartitionError};

/// Bead positions are kept well inside `i64` so that `b ± 4n` never wraps.
const MAX_POSITION: i64 = i64::MAX / 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbacusError {
    #[error("n must be positive")]
    ZeroN,
    #[error("expected {expected} defining beads, got {actual}")]
    WrongBeadCount { expected: usize, actual: usize },
    #[error("defining beads are not strictly increasing at index {index} ({previous} then {position})")]
    NotIncreasing { index: usize, previous: i64, position: i64 },
    #[error("defining beads of classes {first} and {second} share column {column}")]
    ColumnCollision { first: usize, second: usize, column: i64 },
    #[error("defining beads of classes {first} and {second} lie in dual columns {column} and {dual}")]
    DualColumnCollision {
        first: usize,
        second: usize,
        column: i64,
        dual: i64,
    },
    #[error("bead {position} of class {class} lies at or below -n, so it is not a defining bead")]
    NotDefining { class: usize, position: i64 },
    #[error("position {position} is out of the supported range")]
    PositionOutOfRange { position: i64 },
    #[error("bead set is not flush: bead at {position} sits below a gap")]
    NotFlush { position: i64 },
    #[error("bead set is not balanced at position {position}")]
    NotBalanced { position: i64 },
    #[error("validation radius {radius} is smaller than max(2, window of the last defining bead = {window})")]
    RadiusTooSmall { radius: i64, window: i64 },
    #[error("defining beads extracted from the bead set {extracted:?} differ from {declared:?}")]
    DefiningMismatch { declared: Vec<i64>, extracted: Vec<i64> },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlacementError {
    #[error("class {class} is not in [1, {n}]")]
    ClassOutOfRange { class: usize, n: usize },
    #[error("new bead at {position} would not be last in reading order (last defining bead is {last})")]
    NotLast { position: i64, last: i64 },
    #[error(transparent)]
    Invalid(#[from] AbacusError),
}

/// Row, column, dual column and window of one position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PositionGeometry {
    pub position: i64,
    pub row: i64,
    pub column: i64,
    pub dual_column: i64,
    pub window: i64,
}

pub fn geometry(n: usize, position: i64) -> PositionGeometry {
    assert!(n > 0, "n must be positive");
    let n = n as i64;
    let width = 2 * n;
    let column = column_of(width, position);
    PositionGeometry {
        position,
        row: (position - 1).div_euclid(width),
        column,
        dual_column: width + 1 - column,
        window: window_of(n, position),
    }
}

fn column_of(width: i64, position: i64) -> i64 {
    (position - 1).rem_euclid(width) + 1
}

fn window_of(n: i64, position: i64) -> i64 {
    (position + n - 1).div_euclid(n)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbacusDiagram {
    n: usize,
    beads: Vec<i64>,
    /// class (1-based) of each column, indexed by `column - 1`
    column_class: Vec<usize>,
}

impl AbacusDiagram {
    /// Builds and fully validates a diagram from its defining beads, listed
    /// in reading order.
    pub fn new(n: usize, defining_beads: Vec<i64>) -> Result<Self, AbacusError> {
        let abacus = Self::structural(n, defining_beads)?;
        abacus.check_range(None)?;
        Ok(abacus)
    }

    /// Ordering, column coverage and the defining-bead condition; everything
    /// that does not need a scan over positions.
    fn structural(n: usize, beads: Vec<i64>) -> Result<Self, AbacusError> {
        if n == 0 {
            return Err(AbacusError::ZeroN);
        }
        if beads.len() != n {
            return Err(AbacusError::WrongBeadCount {
                expected: n,
                actual: beads.len(),
            });
        }
        if let Some(&position) = beads.iter().find(|b| b.abs() > MAX_POSITION) {
            return Err(AbacusError::PositionOutOfRange { position });
        }
        for (index, pair) in beads.windows(2).enumerate() {
            if pair[0] >= pair[1] {
                return Err(AbacusError::NotIncreasing {
                    index: index + 1,
                    previous: pair[0],
                    position: pair[1],
                });
            }
        }
        let width = 2 * n as i64;
        let mut column_class = vec![0usize; 2 * n];
        for (k, &b) in beads.iter().enumerate() {
            let class = k + 1;
            let column = column_of(width, b);
            let dual = width + 1 - column;
            for slot in [column, dual] {
                let other = column_class[(slot - 1) as usize];
                if other == 0 {
                    continue;
                }
                let other_column = column_of(width, beads[other - 1]);
                return Err(if other_column == column {
                    AbacusError::ColumnCollision {
                        first: other,
                        second: class,
                        column,
                    }
                } else {
                    AbacusError::DualColumnCollision {
                        first: other,
                        second: class,
                        column: other_column,
                        dual: column,
                    }
                });
            }
            column_class[(column - 1) as usize] = class;
            column_class[(dual - 1) as usize] = class;
        }
        let n_i = n as i64;
        if let Some((k, &position)) = beads.iter().enumerate().find(|(_, &b)| b <= -n_i) {
            return Err(AbacusError::NotDefining { class: k + 1, position });
        }
        Ok(Self { n, beads, column_class })
    }

    /// Re-checks flush, balanced, and that the defining beads read back from
    /// the bead set agree with the stored ones, over positions
    /// `[1 - 2n·R, 2n·R]`. `R` defaults to `window(bₙ) + 2`.
    pub fn validate(&self, radius: Option<i64>) -> Result<(), AbacusError> {
        Self::structural(self.n, self.beads.clone())?;
        self.check_range(radius)
    }

    pub fn default_radius(&self) -> i64 {
        self.last_window().max(0) + 2
    }

    fn last_window(&self) -> i64 {
        window_of(self.n as i64, *self.beads.last().expect("n > 0"))
    }

    fn check_range(&self, radius: Option<i64>) -> Result<(), AbacusError> {
        let radius = radius.unwrap_or_else(|| self.default_radius());
        let window = self.last_window();
        // R >= 2 keeps the dual-column lowest beads inside the range
        if radius < window.max(2) {
            return Err(AbacusError::RadiusTooSmall { radius, window });
        }
        let width = self.width();
        let (lo, hi) = (1 - width * radius, width * radius);
        for p in lo..=hi {
            let bead = self.is_bead(p);
            if bead && p - width >= lo && !self.is_bead(p - width) {
                return Err(AbacusError::NotFlush { position: p });
            }
            if bead == self.is_bead(1 - p) {
                return Err(AbacusError::NotBalanced { position: p });
            }
        }
        let extracted = extract_defining_beads(self.n, lo, hi, |p| self.is_bead(p));
        if extracted != self.beads {
            return Err(AbacusError::DefiningMismatch {
                declared: self.beads.clone(),
                extracted,
            });
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn defining_beads(&self) -> &[i64] {
        &self.beads
    }

    /// `bᵢ` with 1-based `i`.
    pub fn bead(&self, i: usize) -> i64 {
        self.beads[i - 1]
    }

    fn width(&self) -> i64 {
        2 * self.n as i64
    }

    pub fn geometry(&self, position: i64) -> PositionGeometry {
        geometry(self.n, position)
    }

    /// Class in `[1, n]` of the column holding `position`.
    pub fn class_of(&self, position: i64) -> usize {
        self.column_class[(column_of(self.width(), position) - 1) as usize]
    }

    pub fn is_bead(&self, position: i64) -> bool {
        let width = self.width();
        let column = column_of(width, position);
        let b = self.beads[self.column_class[(column - 1) as usize] - 1];
        if column == column_of(width, b) {
            position <= b
        } else {
            position <= 1 - width - b
        }
    }

    /// All positive beads in reading order.
    pub fn positive_beads(&self) -> Vec<i64> {
        let last = *self.beads.last().expect("n > 0");
        (1..=last).filter(|&p| self.is_bead(p)).collect()
    }

    /// Number of gaps strictly between `position - 2n` and `position`.
    pub fn gaps_below(&self, position: i64) -> usize {
        (position - self.width() + 1..position)
            .filter(|&p| !self.is_bead(p))
            .count()
    }

    /// `#{a : 0 < a < bound, class(a) = k}`.
    pub fn class_count_before(&self, bound: i64, k: usize) -> usize {
        (1..bound).filter(|&a| self.class_of(a) == k).count()
    }

    /// `ωᵢ = #{positive positions <= bᵢ of class i}`, the window index of
    /// each positive defining bead (0 for the others).
    pub fn window_vector(&self) -> Vec<i64> {
        (1..=self.n)
            .map(|i| (1..=self.bead(i)).filter(|&p| self.class_of(p) == i).count() as i64)
            .collect()
    }
}

/// From the lowest bead of every column, keep the last `n` in reading order.
/// `lo..=hi` must contain every column's lowest bead.
fn extract_defining_beads(n: usize, lo: i64, hi: i64, is_bead: impl Fn(i64) -> bool) -> Vec<i64> {
    let width = 2 * n as i64;
    let mut lowest: Vec<i64> = (1..=width)
        .filter_map(|column| {
            let mut top = hi - column_of(width, hi) + column;
            if top > hi {
                top -= width;
            }
            let mut p = top;
            while p >= lo {
                if is_bead(p) {
                    return Some(p);
                }
                p -= width;
            }
            None
        })
        .collect();
    lowest.sort_unstable();
    lowest.split_off(lowest.len().saturating_sub(n))
}

/// Places `bₙ, bₙ₋₁, ..., b₁` in turn. `bᵢ` is the `λᵢ`-th positive position
/// when columns (and duals) of already placed beads are skipped, or the
/// largest non-positive position in a free column when `λᵢ = 0`.
pub fn encode(lambda: &LectureHallPartition) -> Result<AbacusDiagram, AbacusError> {
    let n = lambda.n();
    let width = 2 * n as i64;
    let mut taken = vec![false; 2 * n];
    let mut beads = vec![0i64; n];
    for i in (1..=n).rev() {
        let free: Vec<i64> = (1..=width).filter(|&c| !taken[(c - 1) as usize]).collect();
        let part = lambda.part(i);
        let b = if part > 0 {
            // each row holds `free.len()` countable positions
            let row = (part - 1) / free.len() as i64;
            let offset = ((part - 1) % free.len() as i64) as usize;
            row.checked_mul(width)
                .and_then(|base| base.checked_add(free[offset]))
                .filter(|b| *b <= MAX_POSITION)
                .ok_or(AbacusError::PositionOutOfRange { position: part })?
        } else {
            free.last().expect("a free column pair remains for every class") - width
        };
        let column = column_of(width, b);
        taken[(column - 1) as usize] = true;
        taken[(width - column) as usize] = true;
        beads[i - 1] = b;
    }
    AbacusDiagram::new(n, beads)
}

/// `λᵢ` is the number of `i`-active positions: positive positions `<= bᵢ`
/// whose class is at most `i`.
pub fn decode(abacus: &AbacusDiagram) -> LectureHallPartition {
    let parts = (1..=abacus.n())
        .map(|i| (1..=abacus.bead(i)).filter(|&p| abacus.class_of(p) <= i).count() as i64)
        .collect();
    LectureHallPartition::from_parts_unchecked(parts)
}

/// Checked variant of [`decode`] for diagrams whose provenance is unknown.
pub fn try_decode(abacus: &AbacusDiagram) -> Result<LectureHallPartition, AbacusError> {
    abacus.validate(None)?;
    let lambda = decode(abacus);
    Ok(LectureHallPartition::new(lambda.into_parts())?)
}

pub fn to_bounded(abacus: &AbacusDiagram) -> BoundedPartition {
    let n = abacus.n() as i64;
    let parts = abacus
        .positive_beads()
        .into_iter()
        .map(|b| if b <= n { b } else { abacus.gaps_below(b) as i64 + 1 })
        .collect();
    BoundedPartition::from_parts_unchecked(abacus.n(), parts)
}

pub fn from_bounded(p: &BoundedPartition) -> Result<AbacusDiagram, AbacusError> {
    let n = p.n() as i64;
    let width = 2 * n;
    let small = p.small_parts();
    let mut placed: Vec<i64> = Vec::new();
    // window 1 holds the small parts, window 0 is its balanced complement,
    // everything at or below -n is a bead and everything past n starts as a gap
    let bead_at = |pos: i64, placed: &[i64]| -> bool {
        if pos <= -n {
            true
        } else if pos <= 0 {
            small.binary_search(&(1 - pos)).is_err()
        } else if pos <= n {
            small.binary_search(&pos).is_ok()
        } else {
            placed.binary_search(&pos).is_ok()
        }
    };

    let mut cursor = n;
    let mut previous: Option<i64> = None;
    for &part in p.large_parts() {
        let mut needed = match previous {
            None => part - n,
            Some(prev) => part - prev + 1,
        };
        let mut pos = cursor;
        // the target lies within the next 2n positions
        let limit = cursor + 2 * width;
        while needed > 0 {
            pos += 1;
            if pos > limit {
                return Err(AbacusError::PositionOutOfRange { position: pos });
            }
            if bead_at(pos - width, &placed) {
                needed -= 1;
            }
        }
        placed.push(pos);
        cursor = pos;
        previous = Some(part);
    }

    let hi = cursor.max(n);
    let lo = -hi - 2 * width;
    let beads = extract_defining_beads(p.n(), lo, hi, |pos| bead_at(pos, &placed));
    AbacusDiagram::new(p.n(), beads)
}

/// Adds a bead at `bᵢ + 2n`, which must come after every other defining bead.
pub fn append_bead(abacus: &AbacusDiagram, class: usize) -> Result<AbacusDiagram, PlacementError> {
    let n = abacus.n();
    if class == 0 || class > n {
        return Err(PlacementError::ClassOutOfRange { class, n });
    }
    let position = abacus.bead(class) + abacus.width();
    let last = abacus.bead(n);
    if class != n && position <= last {
        return Err(PlacementError::NotLast { position, last });
    }
    let mut beads: Vec<i64> = abacus
        .defining_beads()
        .iter()
        .enumerate()
        .filter(|&(k, _)| k + 1 != class)
        .map(|(_, &b)| b)
        .collect();
    beads.push(position);
    Ok(AbacusDiagram::new(n, beads)?)
}

/// Classes whose bead can legally be extended by [`append_bead`].
pub fn legal_insertions(abacus: &AbacusDiagram) -> Vec<usize> {
    let last = abacus.bead(abacus.n());
    (1..=abacus.n())
        .filter(|&i| i == abacus.n() || abacus.bead(i) + abacus.width() > last)
        .collect()
}

/// Free-function form of [`AbacusDiagram::validate`] for raw bead lists.
pub fn validate(n: usize, defining_beads: &[i64], radius: Option<i64>) -> Result<(), AbacusError> {
    let abacus = AbacusDiagram::structural(n, defining_beads.to_vec())?;
    abacus.check_range(radius)
}

/// JSON wire form `{"n": int, "defining_beads": [int, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbacusJson {
    pub n: usize,
    pub defining_beads: Vec<i64>,
}

impl From<&AbacusDiagram> for AbacusJson {
    fn from(abacus: &AbacusDiagram) -> Self {
        Self {
            n: abacus.n,
            defining_beads: abacus.beads.clone(),
        }
    }
}

impl TryFrom<AbacusJson> for AbacusDiagram {
    type Error = AbacusError;

    fn try_from(json: AbacusJson) -> Result<Self, Self::Error> {
        Self::new(json.n, json.defining_beads)
    }
}

impl Serialize for AbacusDiagram {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        AbacusJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AbacusDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let json = AbacusJson::deserialize(deserializer)?;
        Self::try_from(json).map_err(serde::de::Error::custom)
    }
}
