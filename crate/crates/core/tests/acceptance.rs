//! Acceptance suite. Each test checks one criterion and prints a single
//! PASS/FAIL line; run with `-- --nocapture --test-threads=1` to see them.

use std::time::{Duration, Instant};

use lecture_hall::abacus::{self, append_bead, decode, encode, from_bounded, legal_insertions, to_bounded};
use lecture_hall::oracle::{brute_gap_count, brute_lecture_hall, default_rows, simulate_encoding};
use lecture_hall::series::{bounded_gf_identity, lhs_plain, lhs_refined, rhs_plain, rhs_refined, verify_plain, Bounds};
use lecture_hall::{ceiling_stats, enumerate_bounded, AbacusDiagram, LectureHallPartition};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const MAX_N: usize = 4;
const MAX_WEIGHT: i64 = 25;

fn report(id: u32, name: &str, failures: &[String], detail: &str) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {id:>2} [{status}] {name}: {detail}");
    assert!(
        failures.is_empty(),
        "criterion {id} failed with {} failure(s); first: {}",
        failures.len(),
        failures[0]
    );
}

/// Every lecture hall partition in the shared range, from the brute-force oracle.
fn oracle_partitions() -> Vec<LectureHallPartition> {
    (1..=MAX_N)
        .flat_map(|n| brute_lecture_hall(n, MAX_WEIGHT))
        .map(|parts| LectureHallPartition::new(parts).unwrap())
        .collect()
}

fn oracle_abaci() -> Vec<(LectureHallPartition, AbacusDiagram)> {
    oracle_partitions()
        .into_iter()
        .map(|l| {
            let a = encode(&l).unwrap();
            (l, a)
        })
        .collect()
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort();
    samples[samples.len() / 2]
}

#[test]
fn criterion_01_running_example_golden() {
    let mut failures = Vec::new();
    let mut timings = Vec::new();
    for _ in 0..11 {
        let start = Instant::now();
        let lambda = LectureHallPartition::new(vec![0, 1, 4, 8, 14, 30]).unwrap();
        let a = encode(&lambda).unwrap();
        let p = to_bounded(&a);
        let weights = (lambda.weight(), p.weight());
        timings.push(start.elapsed());

        if a.defining_beads() != [-2, 2, 8, 12, 16, 30] {
            failures.push(format!("beads {:?}", a.defining_beads()));
        }
        if p.parts() != [2, 4, 6, 7, 8, 9, 9, 12] {
            failures.push(format!("bounded {:?}", p.parts()));
        }
        if weights != (57, 57) {
            failures.push(format!("weights {weights:?}"));
        }
    }
    let elapsed = median(timings);
    if elapsed >= Duration::from_millis(1) {
        failures.push(format!("median runtime {elapsed:?} >= 1ms"));
    }
    report(
        1,
        "running example golden",
        &failures,
        &format!("median runtime {elapsed:?}"),
    );
}

#[test]
fn criterion_02_round_trips() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut lh_count = 0;
    for (lambda, a) in oracle_abaci() {
        lh_count += 1;
        if decode(&a) != lambda {
            failures.push(format!(
                "decode(encode({:?})) = {:?}",
                lambda.parts(),
                decode(&a).parts()
            ));
        }
        if from_bounded(&to_bounded(&a)).as_ref() != Ok(&a) {
            failures.push(format!("from_bounded(to_bounded(A)) != A for {:?}", a.defining_beads()));
        }
    }
    let mut bounded_count = 0;
    for n in 1..=MAX_N {
        for p in enumerate_bounded(n, MAX_WEIGHT) {
            bounded_count += 1;
            match from_bounded(&p) {
                Ok(a) if to_bounded(&a) == p => {}
                Ok(a) => failures.push(format!(
                    "to_bounded(from_bounded({:?})) = {:?}",
                    p.parts(),
                    to_bounded(&a).parts()
                )),
                Err(e) => failures.push(format!("from_bounded({:?}) failed: {e}", p.parts())),
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(30) {
        failures.push(format!("runtime {elapsed:?} >= 30s"));
    }
    report(
        2,
        "bijection round trips",
        &failures,
        &format!("{lh_count} lecture hall, {bounded_count} bounded partitions in {elapsed:?}"),
    );
}

#[test]
fn criterion_03_weight_preservation() {
    let mut failures = Vec::new();
    let abaci = oracle_abaci();
    for (_, a) in &abaci {
        let (lw, pw) = (decode(a).weight(), to_bounded(a).weight());
        if lw != pw {
            failures.push(format!("{:?}: |λ| = {lw}, |p| = {pw}", a.defining_beads()));
        }
    }
    report(3, "weight preservation", &failures, &format!("{} abaci", abaci.len()));
}

#[test]
fn criterion_04_class_count_difference() {
    let mut failures = Vec::new();
    let mut pairs = 0;
    let mut nonpositive = 0;
    for (_, a) in oracle_abaci() {
        let n = a.n();
        for i in 1..=n {
            for k in i + 1..=n {
                if a.bead(k) - a.bead(i) >= 2 * n as i64 {
                    continue;
                }
                pairs += 1;
                let diff = a.class_count_before(a.bead(k), i) as i64 - a.class_count_before(a.bead(i), k) as i64;
                if diff != 1 {
                    if a.bead(i) <= 0 {
                        nonpositive += 1;
                    }
                    failures.push(format!(
                        "beads {:?}, i={i}, k={k}: difference {diff}",
                        a.defining_beads()
                    ));
                }
            }
        }
    }
    report(
        4,
        "class-count difference is 1",
        &failures,
        &format!(
            "{pairs} pairs, {} violations ({nonpositive} of them with b_i <= 0, where both counts see no positive positions)",
            failures.len()
        ),
    );
}

#[test]
fn criterion_05_plain_identity() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut compared = 0;
    for n in 1..=5 {
        let report = verify_plain(n, 40).unwrap();
        compared += report.compared;
        if let Some(m) = report.mismatch {
            failures.push(format!("n={n}: {m}"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(60) {
        failures.push(format!("runtime {elapsed:?} >= 60s"));
    }
    report(
        5,
        "plain identity to x^40, n = 1..5",
        &failures,
        &format!("{compared} coefficients in {elapsed:?}"),
    );
}

#[test]
fn criterion_06_refined_identity() {
    let mut failures = Vec::new();
    let mut compared = 0;
    for n in 1..=4 {
        let bounds = Bounds::for_max_x(30);
        let lhs = lhs_refined(n, bounds).unwrap();
        let rhs = rhs_refined(n, bounds).unwrap();
        let cmp = lecture_hall::series::compare(&lhs, &rhs).unwrap();
        compared += cmp.compared;
        if let Some(m) = cmp.mismatch {
            failures.push(format!("n={n}: {m}"));
        }
        if lhs.specialize_uv_one().unwrap() != lhs_plain(n, 30).unwrap() {
            failures.push(format!("n={n}: lhs at u=v=1 differs from the plain series"));
        }
        if rhs.specialize_uv_one().unwrap() != rhs_plain(n, 30).unwrap() {
            failures.push(format!("n={n}: rhs at u=v=1 differs from the plain series"));
        }
    }
    report(
        6,
        "refined identity to x^30, n = 1..4",
        &failures,
        &format!("{compared} coefficients"),
    );
}

#[test]
fn criterion_07_refined_statistics() {
    let mut failures = Vec::new();
    let abaci = oracle_abaci();
    for (lambda, a) in &abaci {
        let c = ceiling_stats(lambda);
        let p = to_bounded(a);
        let (small, large) = (p.small_parts().len() as i64, p.large_parts().len() as i64);
        if c.weight != 2 * large + small {
            failures.push(format!(
                "{:?}: |ceil| = {}, 2*{large} + {small}",
                lambda.parts(),
                c.weight
            ));
        }
        if c.odd_count as i64 != small {
            failures.push(format!(
                "{:?}: odd ceilings {}, small parts {small}",
                lambda.parts(),
                c.odd_count
            ));
        }
    }
    report(
        7,
        "ceiling statistics vs bounded parts",
        &failures,
        &format!("{} partitions", abaci.len()),
    );
}

#[test]
fn criterion_08_bounded_identity() {
    let mut failures = Vec::new();
    for n in 1..=5 {
        let report = bounded_gf_identity(n, 40).unwrap();
        if let Some(m) = report.mismatch {
            failures.push(format!("n={n}: {m}"));
        }
    }
    report(
        8,
        "bounded product identity to x^40, n = 1..5",
        &failures,
        "products and enumeration agree",
    );
}

#[test]
fn criterion_09_append_bead() {
    let mut failures = Vec::new();

    // fixed case: the running example grown by one bead at position 18
    let before = encode(&LectureHallPartition::new(vec![0, 1, 3, 6, 10, 16]).unwrap()).unwrap();
    let after = append_bead(&before, before.class_of(18)).unwrap();
    if decode(&after).parts() != [0, 1, 4, 8, 14, 18] || to_bounded(&after).parts() != [2, 4, 6, 7, 8, 9, 9] {
        failures.push(format!("fixed example gave {:?}", decode(&after).parts()));
    }

    let mut rng = StdRng::seed_from_u64(0x1ec7_0e4a11);
    let mut insertions = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=5);
        let seeds: Vec<LectureHallPartition> = lecture_hall::enumerate_lecture_hall(n, 8).collect();
        let mut a = encode(&seeds[rng.gen_range(0..seeds.len())]).unwrap();
        for _ in 0..rng.gen_range(1..=10) {
            let legal = legal_insertions(&a);
            let class = legal[rng.gen_range(0..legal.len())];
            let next = match append_bead(&a, class) {
                Ok(next) => next,
                Err(e) => {
                    failures.push(format!(
                        "legal insertion {class} into {:?} rejected: {e}",
                        a.defining_beads()
                    ));
                    break;
                }
            };
            insertions += 1;
            let delta = decode(&next).weight() - decode(&a).weight();
            let expected_part = (n + class) as i64;
            if delta != expected_part {
                failures.push(format!("{:?} + class {class}: delta {delta}", a.defining_beads()));
            }
            let mut expected = to_bounded(&a).into_parts();
            expected.push(expected_part);
            expected.sort_unstable();
            if to_bounded(&next).parts() != expected {
                failures.push(format!(
                    "{:?} + class {class}: bounded {:?}",
                    a.defining_beads(),
                    to_bounded(&next).parts()
                ));
            }
            a = next;
        }
    }
    report(
        9,
        "append_bead weight delta",
        &failures,
        &format!("200 abaci, {insertions} insertions"),
    );
}

#[test]
fn criterion_10_oracle_agreement() {
    let mut failures = Vec::new();
    let mut cells = 0;
    for (lambda, a) in oracle_abaci() {
        let grid = simulate_encoding(&lambda, default_rows(&lambda)).unwrap();
        for p in grid.positions() {
            cells += 1;
            if grid.is_bead(p) != Some(a.is_bead(p)) {
                failures.push(format!("{:?}: position {p} disagrees", lambda.parts()));
            }
        }
        let n = lambda.n() as i64;
        let brute_parts: Vec<i64> = grid
            .beads
            .iter()
            .filter(|&&p| p > 0)
            .map(|&p| {
                if p <= n {
                    p
                } else {
                    brute_gap_count(&grid, p).unwrap() as i64 + 1
                }
            })
            .collect();
        if brute_parts != abacus::to_bounded(&a).parts() {
            failures.push(format!("{:?}: brute parts {brute_parts:?}", lambda.parts()));
        }
    }
    report(
        10,
        "oracle grid and gap counts",
        &failures,
        &format!("{cells} cells checked"),
    );
}
