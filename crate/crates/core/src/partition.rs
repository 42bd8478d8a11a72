//! Partition value types: lecture hall partitions, bounded partitions and the
//! ceiling statistics that link them.
//!
//! Parts are stored smallest index first, so `parts[0]` is λ₁. All ratio
//! comparisons are done by integer cross-multiplication.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("number of parts must be positive")]
    ZeroLength,
    #[error("expected {expected} parts, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("part {index} is negative ({value})")]
    NegativePart { index: usize, value: i64 },
    #[error("slope condition fails between parts {index} and {next}: {left} * {next} > {right} * {index}", next = index + 1)]
    SlopeViolation { index: usize, left: i64, right: i64 },
    #[error("part {value} is outside [1, {max}]")]
    PartOutOfRange { value: i64, max: i64 },
    #[error("small part {value} appears more than once")]
    RepeatedSmallPart { value: i64 },
    #[error("parts are not weakly increasing at index {index}")]
    NotSorted { index: usize },
    #[error("weight overflows a signed 64-bit integer")]
    Overflow,
    #[error("partition kind is {found:?}, expected {expected:?}")]
    WrongKind {
        expected: PartitionKind,
        found: PartitionKind,
    },
}

/// Sum of parts. Overflow is treated as a bug in the caller and panics.
pub fn weight(parts: &[i64]) -> i64 {
    checked_weight(parts).expect("partition weight overflowed i64")
}

pub(crate) fn checked_weight(parts: &[i64]) -> Option<i64> {
    parts.iter().try_fold(0i64, |acc, &p| acc.checked_add(p))
}

/// Checks the lecture hall inequalities `0 <= λ₁/1 <= λ₂/2 <= ... <= λₙ/n`.
pub fn is_lecture_hall(n: usize, seq: &[i64]) -> Result<bool, PartitionError> {
    if seq.len() != n {
        return Err(PartitionError::LengthMismatch {
            expected: n,
            actual: seq.len(),
        });
    }
    Ok(check_lecture_hall(seq).is_ok())
}

fn check_lecture_hall(seq: &[i64]) -> Result<(), PartitionError> {
    if let Some((index, &value)) = seq.iter().enumerate().find(|(_, &v)| v < 0) {
        return Err(PartitionError::NegativePart {
            index: index + 1,
            value,
        });
    }
    for (k, pair) in seq.windows(2).enumerate() {
        let i = k as i128 + 1;
        // λᵢ·(i+1) <= λᵢ₊₁·i, widened so the products cannot overflow
        if pair[0] as i128 * (i + 1) > pair[1] as i128 * i {
            return Err(PartitionError::SlopeViolation {
                index: k + 1,
                left: pair[0],
                right: pair[1],
            });
        }
    }
    if checked_weight(seq).is_none() {
        return Err(PartitionError::Overflow);
    }
    Ok(())
}

/// A sequence `(λ₁, ..., λₙ)` of non-negative integers with
/// `λ₁/1 <= λ₂/2 <= ... <= λₙ/n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LectureHallPartition {
    parts: Vec<i64>,
}

impl LectureHallPartition {
    pub fn new(parts: Vec<i64>) -> Result<Self, PartitionError> {
        if parts.is_empty() {
            return Err(PartitionError::ZeroLength);
        }
        check_lecture_hall(&parts)?;
        Ok(Self { parts })
    }

    /// The all-zero partition with `n` parts.
    pub fn zero(n: usize) -> Self {
        assert!(n > 0, "number of parts must be positive");
        Self { parts: vec![0; n] }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<i64>) -> Self {
        debug_assert!(check_lecture_hall(&parts).is_ok());
        Self { parts }
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// λᵢ with 1-based `i`.
    pub fn part(&self, i: usize) -> i64 {
        self.parts[i - 1]
    }

    pub fn weight(&self) -> i64 {
        weight(&self.parts)
    }

    pub fn into_parts(self) -> Vec<i64> {
        self.parts
    }
}

/// Checks that `seq` is a bounded partition for `n`: parts in `[1, 2n]`,
/// weakly increasing, parts `<= n` distinct.
pub fn is_bounded(n: usize, seq: &[i64]) -> bool {
    n > 0 && check_bounded(n, seq).is_ok()
}

fn check_bounded(n: usize, seq: &[i64]) -> Result<(), PartitionError> {
    let small = n as i64;
    let max = 2 * small;
    for (index, &value) in seq.iter().enumerate() {
        if !(1..=max).contains(&value) {
            return Err(PartitionError::PartOutOfRange { value, max });
        }
        if index > 0 {
            let prev = seq[index - 1];
            if value < prev {
                return Err(PartitionError::NotSorted { index });
            }
            if value == prev && value <= small {
                return Err(PartitionError::RepeatedSmallPart { value });
            }
        }
    }
    if checked_weight(seq).is_none() {
        return Err(PartitionError::Overflow);
    }
    Ok(())
}

/// A partition whose parts are at most `2n` and whose parts `<= n` are
/// distinct. The empty partition is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundedPartition {
    n: usize,
    parts: Vec<i64>,
}

impl BoundedPartition {
    pub fn new(n: usize, parts: Vec<i64>) -> Result<Self, PartitionError> {
        if n == 0 {
            return Err(PartitionError::ZeroLength);
        }
        check_bounded(n, &parts)?;
        Ok(Self { n, parts })
    }

    pub fn empty(n: usize) -> Self {
        assert!(n > 0, "n must be positive");
        Self { n, parts: Vec::new() }
    }

    pub(crate) fn from_parts_unchecked(n: usize, parts: Vec<i64>) -> Self {
        debug_assert!(check_bounded(n, &parts).is_ok());
        Self { n, parts }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn weight(&self) -> i64 {
        weight(&self.parts)
    }

    /// The distinct parts `<= n`.
    pub fn small_parts(&self) -> &[i64] {
        let split = self.parts.partition_point(|&p| p <= self.n as i64);
        &self.parts[..split]
    }

    /// The parts in `(n, 2n]`.
    pub fn large_parts(&self) -> &[i64] {
        let split = self.parts.partition_point(|&p| p <= self.n as i64);
        &self.parts[split..]
    }

    pub fn into_parts(self) -> Vec<i64> {
        self.parts
    }
}

/// Per-part ceilings `⌈λᵢ/i⌉` with their sum and the number of odd entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CeilingVector {
    pub entries: Vec<i64>,
    pub weight: i64,
    pub odd_count: usize,
}

pub fn ceiling_stats(lambda: &LectureHallPartition) -> CeilingVector {
    let entries: Vec<i64> = lambda
        .parts()
        .iter()
        .zip(1i64..)
        .map(|(&part, i)| ceil_div(part, i))
        .collect();
    let weight = weight(&entries);
    let odd_count = entries.iter().filter(|&&e| e % 2 != 0).count();
    CeilingVector {
        entries,
        weight,
        odd_count,
    }
}

/// Ceiling division for a non-negative numerator and positive denominator.
fn ceil_div(num: i64, den: i64) -> i64 {
    debug_assert!(num >= 0 && den > 0);
    (num + den - 1) / den
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PartitionKind {
    LectureHall,
    Bounded,
}

/// JSON wire form shared by both partition kinds:
/// `{"kind": "lecture_hall" | "bounded", "n": int, "parts": [int, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<PartitionKind>,
    pub n: usize,
    pub parts: Vec<i64>,
}

impl PartitionJson {
    fn expect_kind(&self, expected: PartitionKind) -> Result<(), PartitionError> {
        match self.kind {
            Some(found) if found != expected => Err(PartitionError::WrongKind { expected, found }),
            _ => Ok(()),
        }
    }
}

impl From<&LectureHallPartition> for PartitionJson {
    fn from(lambda: &LectureHallPartition) -> Self {
        Self {
            kind: Some(PartitionKind::LectureHall),
            n: lambda.n(),
            parts: lambda.parts.clone(),
        }
    }
}

impl From<&BoundedPartition> for PartitionJson {
    fn from(p: &BoundedPartition) -> Self {
        Self {
            kind: Some(PartitionKind::Bounded),
            n: p.n,
            parts: p.parts.clone(),
        }
    }
}

impl TryFrom<PartitionJson> for LectureHallPartition {
    type Error = PartitionError;

    fn try_from(json: PartitionJson) -> Result<Self, Self::Error> {
        json.expect_kind(PartitionKind::LectureHall)?;
        if json.n == 0 {
            return Err(PartitionError::ZeroLength);
        }
        if json.parts.len() != json.n {
            return Err(PartitionError::LengthMismatch {
                expected: json.n,
                actual: json.parts.len(),
            });
        }
        Self::new(json.parts)
    }
}

impl TryFrom<PartitionJson> for BoundedPartition {
    type Error = PartitionError;

    fn try_from(json: PartitionJson) -> Result<Self, Self::Error> {
        json.expect_kind(PartitionKind::Bounded)?;
        Self::new(json.n, json.parts)
    }
}

impl Serialize for LectureHallPartition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PartitionJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LectureHallPartition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let json = PartitionJson::deserialize(deserializer)?;
        Self::try_from(json).map_err(serde::de::Error::custom)
    }
}

impl Serialize for BoundedPartition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PartitionJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BoundedPartition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let json = PartitionJson::deserialize(deserializer)?;
        Self::try_from(json).map_err(serde::de::Error::custom)
    }
}
