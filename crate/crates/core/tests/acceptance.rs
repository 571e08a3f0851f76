//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the run
//! exits with failure if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dyckseq_core::conjectures::{
    check_conj16, check_conj18, check_prop12, conj16_offsets, conj18_terms, quarter,
};
use dyckseq_core::cores::{core, core_size, core_subsequence, rejected_terms, subsegments};
use dyckseq_core::dyck::{dyck_succ, is_dyck_number, succ_of_mersenne};
use dyckseq_core::fixtures::{bundled_bfile, listing_terms};
use dyckseq_core::levels::{level_scan, level_size, level_structural, mersenne, stream_terms};
use dyckseq_core::oeis::{
    a001405, a002054, catalan, compare, index_shift, local_values, SequenceId,
};
use dyckseq_core::patterns::{verify_eq1, verify_eq2};
use dyckseq_core::DyckNumber;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Pascal's rule, independent of the multiplicative binomial.
fn pascal_central(n: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![1u128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row[n / 2]
}

fn first_terms() -> Outcome {
    let listed = [
        0, 1, 3, 5, 7, 11, 13, 15, 19, 21, 23, 27, 29, 31, 39, 43, 45, 47, 51, 53, 55, 59, 61, 63,
        71, 75, 77, 79, 83, 85, 87, 91, 93, 95, 103, 107, 109, 111, 115, 117, 119, 123, 125, 127,
        143, 151, 155, 157,
    ];
    let got = stream_terms(48).map_err(err)?;
    ensure(got == listed, || format!("got {got:?}"))?;
    Ok("48 terms".into())
}

fn level_sizes() -> Outcome {
    let listed = [1u128, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252, 462];
    for n in 1..=22u32 {
        let formula = level_size(n);
        let oracle = pascal_central(n as usize - 1);
        let measured = level_scan(n).map_err(err)?.len() as u128;
        ensure(formula == oracle && formula == measured, || {
            format!("n={n}: formula {formula}, Pascal {oracle}, scan {measured}")
        })?;
        if let Some(&want) = listed.get(n as usize - 1) {
            ensure(formula == want, || {
                format!("n={n}: {formula} != listed {want}")
            })?;
        }
    }
    Ok("n=1..=22".into())
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    for n in 1..=22u32 {
        let scan = level_scan(n).map_err(err)?;
        let structural = level_structural(n).map_err(err)?;
        ensure(scan.terms == structural.terms, || format!("n={n} differs"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= Duration::from_secs(10), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("n=1..=22 in {elapsed:.2?}"))
}

fn core_fixture() -> Outcome {
    let c8 = core(8).map_err(err)?;
    ensure(c8.terms == [143, 151, 155, 157, 159], || {
        format!("core 8 {:?}", c8.terms)
    })?;
    let c10 = core(10).map_err(err)?;
    ensure(c10.len() == 21, || format!("core 10 has {}", c10.len()))?;
    let tops: Vec<u64> = subsegments(&c10)
        .map_err(err)?
        .iter()
        .map(|s| *s.last().unwrap())
        .collect();
    ensure(tops == [543, 575, 607, 639], || {
        format!("core 10 tops {tops:?}")
    })?;
    ensure(c10.subsegment_tops() == [543, 575, 607, 639], || {
        "declared tops".into()
    })?;
    for (n, want) in [(12, 84), (14, 330)] {
        let len = core(n).map_err(err)?.len();
        ensure(len == want, || format!("core {n} has {len}"))?;
    }
    Ok("cores 8, 10, 12, 14".into())
}

fn published_listing() -> Outcome {
    let fixture = listing_terms();
    ensure(fixture.len() >= 500, || {
        format!("fixture has {}", fixture.len())
    })?;
    let through_14 = core_subsequence(14).map_err(err)?;
    ensure(fixture.starts_with(&through_14), || {
        let i = through_14.iter().zip(&fixture).position(|(a, b)| a != b);
        format!("cores 6..=14 diverge at index {i:?}")
    })?;
    // The listing continues into the 16-core.
    let through_16 = core_subsequence(16).map_err(err)?;
    ensure(through_16[..500] == fixture[..500], || {
        "first 500 terms differ".into()
    })?;
    ensure(through_16.starts_with(&fixture), || {
        "full listing differs".into()
    })?;
    Ok(format!(
        "{} terms of cores 6..=14 prefix the listing; all {} listed terms matched",
        through_14.len(),
        fixture.len()
    ))
}

fn catalan_rejection() -> Outcome {
    for n in (6..=24u32).step_by(2) {
        let rejected = rejected_terms(n).map_err(err)?;
        // Catalan numbers through Segner's recurrence.
        let k = (n / 2 - 1) as usize;
        let mut cat = vec![1u128];
        for m in 1..=k {
            cat.push((0..m).map(|i| cat[i] * cat[m - 1 - i]).sum());
        }
        ensure(rejected.len() as u128 == cat[k], || {
            format!("n={n}: {} rejected, Cat = {}", rejected.len(), cat[k])
        })?;
        let width = n - 2;
        for t in rejected {
            let word = t ^ (1 << (width - 1));
            // A Dyck word read from the right, with equal counts.
            let mut balance = 0i32;
            for i in 0..width {
                balance += if word >> i & 1 == 1 { 1 } else { -1 };
                ensure(balance >= 0, || format!("n={n}: {t} is not a Dyck word"))?;
            }
            ensure(balance == 0, || format!("n={n}: {t} is unbalanced"))?;
        }
    }
    Ok("even n=6..=24".into())
}

fn identities() -> Outcome {
    for k in 1..=40u64 {
        let a = a002054(k).map_err(err)?;
        ensure(2 * a == u128::from(k) * catalan(k + 1), || {
            format!("k * Cat(k + 1) / 2 form, k={k}")
        })?;
        ensure(a == a001405(2 * k + 1) - catalan(k + 1), || {
            format!("A001405 - Catalan form, k={k}")
        })?;
        ensure(
            a == pascal_choose(2 * k as usize + 1, k as usize - 1),
            || format!("A002054({k}) against Pascal"),
        )?;
    }
    for n in (6..=30u32).step_by(2) {
        let cat = catalan(u64::from(n / 2 - 1));
        let size = level_size(n);
        ensure(size == 4 * level_size(n - 2) - cat, || {
            format!("level recurrence n={n}, 4x form")
        })?;
        ensure(size == 2 * level_size(n - 1) - cat, || {
            format!("level recurrence n={n}, 2x form")
        })?;
        if n <= 22 {
            let measured = level_structural(n).map_err(err)?.len() as u128;
            ensure(measured == size, || {
                format!("level recurrence n={n}, measured {measured}")
            })?;
        }
    }
    let listed: [u128; 12] = [
        1, 5, 21, 84, 330, 1287, 5005, 19448, 75582, 293930, 1144066, 4457400,
    ];
    for (i, want) in listed.iter().enumerate() {
        let n = 6 + 2 * i as u32;
        let size = core_size(n).map_err(err)?;
        ensure(size == *want, || {
            format!("core size n={n}: {size} != {want}")
        })?;
        if n <= 20 {
            let measured = core(n).map_err(err)?.len() as u128;
            ensure(measured == *want, || {
                format!("core {n} measured {measured}")
            })?;
        }
    }
    Ok("A002054 forms k=1..=40, level recurrence n=6..=30, 12 core sizes".into())
}

fn pascal_choose(n: usize, k: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![1u128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row[k]
}

fn eq1_eq2() -> Outcome {
    for n in (5..=21u32).step_by(2) {
        let o = verify_eq1(n);
        ensure(o.passed, || o.to_string())?;
    }
    for n in (6..=22u32).step_by(2) {
        let o = verify_eq2(n);
        ensure(o.passed, || o.to_string())?;
    }
    Ok("eq1 odd n=5..=21, eq2 even n=6..=22".into())
}

fn prop12() -> Outcome {
    for n in (6..=18u32).step_by(2) {
        let o = check_prop12(n);
        ensure(o.passed, || o.to_string())?;
    }
    // 39 sits in the first quarter of level 6; its triplet tops at 159.
    let top = 4 * 39 + 3;
    ensure(
        quarter(39, 6) == 1 && quarter(top, 8) == 1 && core(8).map_err(err)?.top() == top,
        || "t=39".into(),
    )?;
    let upper = level_structural(8).map_err(err)?;
    let m = mersenne(6);
    ensure(
        [4 * m - 1, 4 * m + 1, 4 * m + 3] == [mersenne(8) - 4, mersenne(8) - 2, mersenne(8)]
            && upper.contains(mersenne(8) - 4),
        || "Mersenne triplet".into(),
    )?;
    Ok("even n=6..=18".into())
}

fn conj16() -> Outcome {
    for n in (8..=20u32).step_by(2) {
        let (second, third) = conj16_offsets(n);
        ensure(second == 13 << (n - 3) && third == 7 << (n - 2), || {
            format!("offsets n={n}")
        })?;
        let o = check_conj16(n);
        ensure(o.passed, || o.to_string())?;
    }
    ensure(conj16_offsets(20) == (1703936, 1835008), || {
        format!("n=20 offsets {:?}", conj16_offsets(20))
    })?;
    Ok("even n=8..=20".into())
}

fn conj18() -> Outcome {
    for n in (12..=20u32).step_by(2) {
        let o = check_conj18(n);
        ensure(o.passed, || o.to_string())?;
    }
    for (n, want) in [(12, 35), (14, 126), (16, 462)] {
        let len = conj18_terms(n).map_err(err)?.1.len();
        ensure(len == want, || format!("n={n}: {len} != {want}"))?;
    }
    Ok("even n=12..=20; sizes 35, 126, 462".into())
}

fn successor_closed_form() -> Outcome {
    for n in 1..=24u32 {
        let m = DyckNumber::new(mersenne(n)).unwrap();
        let closed = succ_of_mersenne(n).map_err(err)?;
        let stepped = dyck_succ(m).map_err(err)?;
        // Independent linear scan.
        let scanned = (mersenne(n) + 1..).find(|&v| is_dyck_number(v)).unwrap();
        ensure(closed == stepped && closed.get() == scanned, || {
            format!("n={n}: closed {closed}, succ {stepped}, scan {scanned}")
        })?;
    }
    let values: Vec<u64> = [5, 7, 9]
        .iter()
        .map(|&n| succ_of_mersenne(n).map(|d| d.get()))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    ensure(values == [39, 143, 543], || format!("{values:?}"))?;
    Ok("n=1..=24".into())
}

fn gap_property() -> Outcome {
    let start = Instant::now();
    let terms = stream_terms(1_000_001).map_err(err)?;
    let mut t = DyckNumber::ZERO;
    for (i, pair) in terms.windows(2).enumerate() {
        let next = dyck_succ(t).map_err(err)?;
        ensure(next.get() == pair[1], || {
            format!("succ of term {i} is {next}, stream has {}", pair[1])
        })?;
        let gap = pair[1] - pair[0];
        ensure(gap.is_power_of_two(), || {
            format!("gap {gap} after {}", pair[0])
        })?;
        t = next;
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= Duration::from_secs(30), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("10^6 terms in {elapsed:.2?}"))
}

fn oeis_cross_check() -> Outcome {
    let mut notes = Vec::new();
    for number in [2054, 52940, 290114, 86224, 52549, 36991] {
        let id = SequenceId::new(number).unwrap();
        let bfile = bundled_bfile(id)
            .ok_or(format!("{id} not bundled"))?
            .map_err(err)?;
        let shift = index_shift(id).ok_or(format!("{id} has no index shift"))?;
        let count = if id == SequenceId::A036991 { 1000 } else { 60 };
        let values = local_values(id, count).map_err(err)?;
        let outcome = compare(&id.to_string(), &values, &bfile, shift).map_err(err)?;
        ensure(outcome.passed, || outcome.to_string())?;
        let overlap = values
            .iter()
            .filter(|(i, _)| bfile.get(i + shift).is_some())
            .count();
        ensure(overlap >= 20, || {
            format!("{id}: {overlap} overlapping indices")
        })?;
        notes.push(format!("{id} {overlap}"));
    }
    Ok(notes.join(", "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 14] = [
        ("first terms", first_terms),
        ("level sizes", level_sizes),
        ("scan equals structural", oracle_equivalence),
        ("core fixture", core_fixture),
        ("published core listing", published_listing),
        ("catalan rejection", catalan_rejection),
        ("identities", identities),
        ("eq1 and eq2", eq1_eq2),
        ("triplet generation", prop12),
        ("middle subsegments", conj16),
        ("top subsegment", conj18),
        ("successor closed form", successor_closed_form),
        ("gap property", gap_property),
        ("oeis cross-check", oeis_cross_check),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(note) => println!("PASS {:>2} {name}: {note}", i + 1),
            Err(why) => {
                println!("FAIL {:>2} {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if failed.is_empty() {
        println!(
            "acceptance: {} of {} criteria passed",
            criteria.len(),
            criteria.len()
        );
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
