//! C ABI over `lecture_hall`.
//!
//! Objects are opaque heap handles created by `*_new` or by a conversion and
//! released with the matching `*_free`. Every fallible call returns an
//! [`LhStatus`] and writes its result through an out pointer, which is left
//! untouched on failure. Sequences are copied out with the two-call pattern:
//! ask for the length, then pass a buffer at least that long.

use std::ffi::c_char;
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;
use std::slice;

use lecture_hall::abacus::{self, AbacusDiagram};
use lecture_hall::series::{self, IdentityReport, SeriesError};
use lecture_hall::{BoundedPartition, LectureHallPartition};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LhStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidPartition = 2,
    InvalidAbacus = 3,
    BufferTooSmall = 4,
    Overflow = 5,
    Mismatch = 6,
    Panic = 7,
}

/// A lecture hall partition.
pub struct LhPartition(LectureHallPartition);

/// A bounded partition together with its `n`.
pub struct LhBounded(BoundedPartition);

/// An abacus diagram given by its defining beads.
pub struct LhAbacus(AbacusDiagram);

/// Outcome of a generating-function check. When `mismatch` is nonzero the
/// `x`, `u`, `v` fields hold the first exponent where the two sides differ.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LhVerifyReport {
    pub compared: u64,
    pub mismatch: u8,
    pub x: u32,
    pub u: u32,
    pub v: u32,
}

fn guard(f: impl FnOnce() -> LhStatus + UnwindSafe) -> LhStatus {
    catch_unwind(f).unwrap_or(LhStatus::Panic)
}

/// Reads `len` values from `data`, accepting a null pointer when `len` is 0.
unsafe fn read_slice(data: *const i64, len: usize) -> Option<Vec<i64>> {
    if len == 0 {
        return Some(Vec::new());
    }
    if data.is_null() {
        return None;
    }
    Some(slice::from_raw_parts(data, len).to_vec())
}

unsafe fn copy_out(values: &[i64], out: *mut i64, capacity: usize) -> LhStatus {
    if values.is_empty() {
        return LhStatus::Ok;
    }
    if out.is_null() {
        return LhStatus::NullPointer;
    }
    if capacity < values.len() {
        return LhStatus::BufferTooSmall;
    }
    ptr::copy_nonoverlapping(values.as_ptr(), out, values.len());
    LhStatus::Ok
}

unsafe fn emit<T>(out: *mut *mut T, value: T) -> LhStatus {
    *out = Box::into_raw(Box::new(value));
    LhStatus::Ok
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn lh_status_message(status: LhStatus) -> *const c_char {
    let text: &'static [u8] = match status {
        LhStatus::Ok => b"ok\0",
        LhStatus::NullPointer => b"null pointer argument\0",
        LhStatus::InvalidPartition => b"invalid partition\0",
        LhStatus::InvalidAbacus => b"invalid abacus diagram\0",
        LhStatus::BufferTooSmall => b"output buffer too small\0",
        LhStatus::Overflow => b"arithmetic overflow\0",
        LhStatus::Mismatch => b"generating functions differ\0",
        LhStatus::Panic => b"internal error\0",
    };
    text.as_ptr().cast()
}

// ---------------------------------------------------------------------------
// lecture hall partitions

/// # Safety
/// `parts` must point to `len` readable values (or be null when `len` is 0)
/// and `out` must be a valid pointer to write the handle into.
#[no_mangle]
pub unsafe extern "C" fn lh_partition_new(parts: *const i64, len: usize, out: *mut *mut LhPartition) -> LhStatus {
    guard(|| {
        if out.is_null() {
            return LhStatus::NullPointer;
        }
        let Some(parts) = read_slice(parts, len) else {
            return LhStatus::NullPointer;
        };
        match LectureHallPartition::new(parts) {
            Ok(lambda) => emit(out, LhPartition(lambda)),
            Err(lecture_hall::PartitionError::Overflow) => LhStatus::Overflow,
            Err(_) => LhStatus::InvalidPartition,
        }
    })
}

/// # Safety
/// `partition` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lh_partition_free(partition: *mut LhPartition) {
    if !partition.is_null() {
        drop(Box::from_raw(partition));
    }
}

/// Number of parts, or 0 for a null handle.
///
/// # Safety
/// `partition` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lh_partition_len(partition: *const LhPartition) -> usize {
    partition.as_ref().map_or(0, |p| p.0.n())
}

/// # Safety
/// `partition` must be a live handle and `out` must have room for `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn lh_partition_parts(partition: *const LhPartition, out: *mut i64, capacity: usize) -> LhStatus {
    match partition.as_ref() {
        Some(p) => copy_out(p.0.parts(), out, capacity),
        None => LhStatus::NullPointer,
    }
}

/// # Safety
/// `partition` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lh_partition_weight(partition: *const LhPartition, out: *mut i64) -> LhStatus {
    match (partition.as_ref(), out.is_null()) {
        (Some(p), false) => {
            *out = p.0.weight();
            LhStatus::Ok
        }
        _ => LhStatus::NullPointer,
    }
}

// ---------------------------------------------------------------------------
// bounded partitions

/// # Safety
/// Same contract as [`lh_partition_new`].
#[no_mangle]
pub unsafe extern "C" fn lh_bounded_new(n: usize, parts: *const i64, len: usize, out: *mut *mut LhBounded) -> LhStatus {
    guard(|| {
        if out.is_null() {
            return LhStatus::NullPointer;
        }
        let Some(parts) = read_slice(parts, len) else {
            return LhStatus::NullPointer;
        };
        match BoundedPartition::new(n, parts) {
            Ok(p) => emit(out, LhBounded(p)),
            Err(lecture_hall::PartitionError::Overflow) => LhStatus::Overflow,
            Err(_) => LhStatus::InvalidPartition,
        }
    })
}

/// # Safety
/// `bounded` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lh_bounded_free(bounded: *mut LhBounded) {
    if !bounded.is_null() {
        drop(Box::from_raw(bounded));
    }
}

/// Number of parts (possibly 0), or 0 for a null handle.
///
/// # Safety
/// `bounded` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lh_bounded_len(bounded: *const LhBounded) -> usize {
    bounded.as_ref().map_or(0, |p| p.0.parts().len())
}

/// # Safety
/// `bounded` must be a live handle and `out` must have room for `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn lh_bounded_parts(bounded: *const LhBounded, out: *mut i64, capacity: usize) -> LhStatus {
    match bounded.as_ref() {
        Some(p) => copy_out(p.0.parts(), out, capacity),
        None => LhStatus::NullPointer,
    }
}

/// # Safety
/// `bounded` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lh_bounded_weight(bounded: *const LhBounded, out: *mut i64) -> LhStatus {
    match (bounded.as_ref(), out.is_null()) {
        (Some(p), false) => {
            *out = p.0.weight();
            LhStatus::Ok
        }
        _ => LhStatus::NullPointer,
    }
}

// ---------------------------------------------------------------------------
// abacus diagrams

/// Builds an abacus from `n` defining beads in increasing order.
///
/// # Safety
/// `beads` must point to `len` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lh_abacus_new(n: usize, beads: *const i64, len: usize, out: *mut *mut LhAbacus) -> LhStatus {
    guard(|| {
        if out.is_null() {
            return LhStatus::NullPointer;
        }
        let Some(beads) = read_slice(beads, len) else {
            return LhStatus::NullPointer;
        };
        match AbacusDiagram::new(n, beads) {
            Ok(a) => emit(out, LhAbacus(a)),
            Err(_) => LhStatus::InvalidAbacus,
        }
    })
}

/// # Safety
/// `abacus` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lh_abacus_free(abacus: *mut LhAbacus) {
    if !abacus.is_null() {
        drop(Box::from_raw(abacus));
    }
}

/// `n`, which is also the number of defining beads; 0 for a null handle.
///
/// # Safety
/// `abacus` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lh_abacus_n(abacus: *const LhAbacus) -> usize {
    abacus.as_ref().map_or(0, |a| a.0.n())
}

/// # Safety
/// `abacus` must be a live handle and `out` must have room for `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn lh_abacus_beads(abacus: *const LhAbacus, out: *mut i64, capacity: usize) -> LhStatus {
    match abacus.as_ref() {
        Some(a) => copy_out(a.0.defining_beads(), out, capacity),
        None => LhStatus::NullPointer,
    }
}

/// Writes 1 to `out` if `position` holds a bead, else 0.
///
/// # Safety
/// `abacus` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lh_abacus_is_bead(abacus: *const LhAbacus, position: i64, out: *mut u8) -> LhStatus {
    match (abacus.as_ref(), out.is_null()) {
        (Some(a), false) => {
            *out = a.0.is_bead(position) as u8;
            LhStatus::Ok
        }
        _ => LhStatus::NullPointer,
    }
}

// ---------------------------------------------------------------------------
// bijections

/// # Safety
/// `partition` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lh_encode(partition: *const LhPartition, out: *mut *mut LhAbacus) -> LhStatus {
    guard(|| match (partition.as_ref(), out.is_null()) {
        (Some(p), false) => match abacus::encode(&p.0) {
            Ok(a) => emit(out, LhAbacus(a)),
            Err(_) => LhStatus::Overflow,
        },
        _ => LhStatus::NullPointer,
    })
}

/// # Safety
/// `abacus` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lh_decode(abacus: *const LhAbacus, out: *mut *mut LhPartition) -> LhStatus {
    guard(|| match (abacus.as_ref(), out.is_null()) {
        (Some(a), false) => match abacus::try_decode(&a.0) {
            Ok(p) => emit(out, LhPartition(p)),
            Err(_) => LhStatus::InvalidAbacus,
        },
        _ => LhStatus::NullPointer,
    })
}

/// # Safety
/// `abacus` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lh_to_bounded(abacus: *const LhAbacus, out: *mut *mut LhBounded) -> LhStatus {
    guard(|| match (abacus.as_ref(), out.is_null()) {
        (Some(a), false) => emit(out, LhBounded(abacus::to_bounded(&a.0))),
        _ => LhStatus::NullPointer,
    })
}

/// # Safety
/// `bounded` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lh_from_bounded(bounded: *const LhBounded, out: *mut *mut LhAbacus) -> LhStatus {
    guard(|| match (bounded.as_ref(), out.is_null()) {
        (Some(p), false) => match abacus::from_bounded(&p.0) {
            Ok(a) => emit(out, LhAbacus(a)),
            Err(_) => LhStatus::InvalidPartition,
        },
        _ => LhStatus::NullPointer,
    })
}

// ---------------------------------------------------------------------------
// generating functions

/// Compares both sides of the lecture hall generating-function identity up
/// to `x^max_x`, in `x` alone or with the `u`, `v` refinement when `refined`
/// is nonzero. Returns `Ok` or `Mismatch` and fills `report` in both cases.
///
/// # Safety
/// `report` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lh_verify(n: usize, max_x: u32, refined: u8, report: *mut LhVerifyReport) -> LhStatus {
    guard(|| {
        if report.is_null() {
            return LhStatus::NullPointer;
        }
        if n == 0 {
            return LhStatus::InvalidPartition;
        }
        let result = if refined != 0 {
            series::verify_refined(n, max_x)
        } else {
            series::verify_plain(n, max_x)
        };
        match result {
            Ok(r) => {
                let status = if r.is_ok() { LhStatus::Ok } else { LhStatus::Mismatch };
                *report = to_report(&r);
                status
            }
            Err(SeriesError::Overflow) => LhStatus::Overflow,
            Err(_) => LhStatus::InvalidPartition,
        }
    })
}

fn to_report(r: &IdentityReport) -> LhVerifyReport {
    let mut out = LhVerifyReport {
        compared: r.compared as u64,
        ..Default::default()
    };
    if let Some(m) = r.mismatch {
        out.mismatch = 1;
        out.x = m.exponent.x;
        out.u = m.exponent.u;
        out.v = m.exponent.v;
    }
    out
}
