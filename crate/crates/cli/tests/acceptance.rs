//! Acceptance criteria. Each criterion prints one PASS or FAIL line; the test
//! fails if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use freerack::sample;
use freerack_core::{
    rack::check_axioms,
    subrack::{
        closure, express_over_basis, lift_basis, rack_member, Basis, Expressed, MembershipAnswer,
        NonMemberReason,
    },
    Generator, GroupWord, NormalForm, QuandleElement, RackElement, Sign, Syllable, WordMode,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: String) -> Verdict {
    Verdict { pass, detail }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn element(rng: &mut ChaCha8Rng, mode: WordMode) -> RackElement {
    let k = rng.random_range(1..=4);
    sample::element(rng, k, 8, mode)
}

fn sign(rng: &mut ChaCha8Rng, mode: WordMode) -> Sign {
    match mode {
        WordMode::Free if rng.random_bool(0.5) => Sign::Neg,
        _ => Sign::Pos,
    }
}

fn axioms(mode: WordMode) -> Verdict {
    let mut r = rng(1);
    let triples: Vec<_> = (0..10_000)
        .map(|_| {
            let k = r.random_range(1..=4);
            let mut draw = || sample::element(&mut r, k, 8, mode);
            (draw(), draw(), draw())
        })
        .collect();
    let start = Instant::now();
    let report = check_axioms(&triples).unwrap();
    let secs = start.elapsed().as_secs_f64();
    verdict(
        report.is_ok() && secs < 10.0,
        format!(
            "{} law instances on 10000 triples, {} counterexamples, {secs:.2}s",
            report.checked,
            report.violations.len()
        ),
    )
}

fn homomorphism(mode: WordMode) -> Verdict {
    let mut r = rng(2);
    let mut failures = 0;
    for _ in 0..10_000 {
        let k = r.random_range(1..=4);
        let x = sample::element(&mut r, k, 8, mode);
        let y = sample::element(&mut r, k, 8, mode);
        for s in Sign::BOTH {
            if x.op(&y, s).unwrap().project() != x.project().op(&y.project(), s).unwrap() {
                failures += 1;
            }
        }
    }
    verdict(
        failures == 0,
        format!("10000 pairs, both signs, {failures} failures"),
    )
}

fn iterate_power(r: &RackElement, k: i64) -> RackElement {
    let s = if k < 0 { Sign::Neg } else { Sign::Pos };
    (0..k.unsigned_abs()).fold(r.clone(), |acc, _| acc.op(r, s).unwrap())
}

fn push_power(mode: WordMode) -> Verdict {
    let mut r = rng(3);
    let mut failures = 0;
    for _ in 0..1000 {
        let (x, t) = (element(&mut r, mode), element(&mut r, mode));
        for s in Sign::BOTH {
            let xt = x.op(&t, s).unwrap();
            for k in -6..=6 {
                if xt.power(k) != x.power(k).op(&t, s).unwrap() {
                    failures += 1;
                }
            }
        }
    }
    let mut closed = 0;
    for _ in 0..1000 {
        let x = element(&mut r, mode);
        for k in -10..=10 {
            if x.power(k) != iterate_power(&x, k) {
                closed += 1;
            }
        }
    }
    verdict(
        failures + closed == 0,
        format!("1000 pairs |k|<=6: {failures} failures; 1000 elements |k|<=10: {closed} failures"),
    )
}

fn fiber(mode: WordMode) -> Verdict {
    let mut r = rng(4);
    let mut failures = 0;
    let mut sizes = BTreeSet::new();
    for _ in 0..100 {
        let k = r.random_range(1..=4);
        let e = sample::element(&mut r, k, 6, mode);
        let bound = e.word().len() + r.random_range(0..=3);
        let x = e.base();
        let span = (bound + e.word().len()) as i64 + 1;
        let expected: BTreeSet<RackElement> = (-span..=span)
            .map(|n| {
                let w = GroupWord::power(x, n, mode).concat(e.word()).unwrap();
                RackElement::new(x, w)
            })
            .filter(|f| f.word().len() <= bound)
            .collect();
        let got: BTreeSet<RackElement> = closure(std::slice::from_ref(&e), bound)
            .unwrap()
            .elements
            .into_iter()
            .collect();
        let reps_ok = mode == WordMode::Free || expected.len() <= 2;
        if got != expected || !reps_ok {
            failures += 1;
        }
        sizes.insert(got.len());
    }
    verdict(
        failures == 0,
        format!("100 elements, {failures} mismatches, fiber sizes {sizes:?}"),
    )
}

/// Conjugates `x_i^{w_i}` moved by `x_s -> x_t^-e x_s x_t^e`.
fn conjugating_move(
    classes: &mut [(usize, GroupWord)],
    s: usize,
    t: usize,
    e: i64,
    mode: WordMode,
) {
    let (gs, gt) = (Generator::from_index(s), Generator::from_index(t));
    for (i, w) in classes.iter_mut() {
        let mut raw = Vec::new();
        if *i == s {
            raw.push(Syllable {
                generator: gt,
                exponent: e,
            });
        }
        for syl in w.syllables() {
            if syl.generator == gs {
                for _ in 0..syl.exponent.unsigned_abs() {
                    raw.push(Syllable {
                        generator: gt,
                        exponent: -e,
                    });
                    raw.push(Syllable {
                        generator: gs,
                        exponent: syl.exponent.signum(),
                    });
                    raw.push(Syllable {
                        generator: gt,
                        exponent: e,
                    });
                }
            } else {
                raw.push(*syl);
            }
        }
        *w = GroupWord::reduce(raw, mode);
    }
}

/// A subset of a free basis of the free quandle on four generators, lifted
/// to fiber-canonical rack elements.
fn random_basis(r: &mut ChaCha8Rng, mode: WordMode) -> Basis {
    let mut classes: Vec<(usize, GroupWord)> =
        (0..4).map(|i| (i, GroupWord::identity(mode))).collect();
    for _ in 0..r.random_range(0..=4) {
        let s = r.random_range(0..4);
        let t = (s + r.random_range(1..4)) % 4;
        let e = if r.random_bool(0.5) { 1 } else { -1 };
        conjugating_move(&mut classes, s, t, e, mode);
    }
    let size = r.random_range(1..=4);
    let mut picked: Vec<usize> = (0..4).collect();
    for i in 0..4 {
        picked.swap(i, r.random_range(i..4));
    }
    let chosen: Vec<QuandleElement> = picked[..size]
        .iter()
        .map(|&i| QuandleElement::new(Generator::from_index(i), classes[i].1.clone()))
        .collect();
    lift_basis(&chosen).unwrap()
}

fn random_form(r: &mut ChaCha8Rng, k: usize, mode: WordMode) -> NormalForm {
    let head = r.random_range(0..k);
    let head_exponent = match mode {
        WordMode::Free => r.random_range(-4..=4),
        WordMode::Involutory => r.random_range(0..=1),
    };
    let len = if k == 1 { 0 } else { r.random_range(0..=5) };
    let mut tail: Vec<(Sign, usize)> = Vec::new();
    while tail.len() < len {
        let j = r.random_range(0..k);
        let s = sign(r, mode);
        let bad = match tail.last() {
            None => j == head,
            Some(&(ls, lj)) => lj == j && (mode == WordMode::Involutory || ls == s.flip()),
        };
        if !bad {
            tail.push((s, j));
        }
    }
    NormalForm {
        head,
        head_exponent,
        tail,
    }
}

fn normal_forms(mode: WordMode) -> Verdict {
    let mut r = rng(5);
    let (mut mismatches, mut collisions, mut forms) = (0, 0, 0);
    for _ in 0..50 {
        let basis = random_basis(&mut r, mode);
        let mut seen: BTreeMap<RackElement, NormalForm> = BTreeMap::new();
        for _ in 0..20 {
            let nf = random_form(&mut r, basis.len(), mode);
            forms += 1;
            let e = nf.evaluate(&basis).unwrap();
            if express_over_basis(&e, &basis, 6).unwrap() != Expressed::Found(nf.clone()) {
                mismatches += 1;
            }
            match seen.get(&e) {
                Some(prev) if *prev != nf => collisions += 1,
                _ => {
                    seen.insert(e, nf);
                }
            }
        }
    }
    verdict(
        mismatches + collisions == 0,
        format!("{forms} forms over 50 bases, {mismatches} round-trip mismatches, {collisions} collisions"),
    )
}

/// Exhaustive closure: every ordered pair, both signs, each pair once.
/// `None` if the set outgrows `cap`.
fn brute<E: Ord + Clone>(
    seeds: &[E],
    bound: usize,
    cap: usize,
    op: impl Fn(&E, &E, Sign) -> E,
    len: impl Fn(&E) -> usize,
) -> Option<(BTreeSet<E>, bool)> {
    let mut truncated = seeds.iter().any(|s| len(s) > bound);
    let mut set: BTreeSet<E> = seeds.iter().filter(|s| len(s) <= bound).cloned().collect();
    let mut all: Vec<E> = set.iter().cloned().collect();
    let mut done = 0;
    loop {
        let n = all.len();
        let mut fresh = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i < done && j < done {
                    continue;
                }
                for s in Sign::BOTH {
                    let p = op(&all[i], &all[j], s);
                    if len(&p) > bound {
                        truncated = true;
                    } else if set.insert(p.clone()) {
                        fresh.push(p);
                    }
                }
            }
        }
        if fresh.is_empty() {
            return Some((set, truncated));
        }
        done = n;
        all.extend(fresh);
        if all.len() > cap {
            return None;
        }
    }
}

fn membership(mode: WordMode) -> Verdict {
    const CAP: usize = 2500;
    let mut r = rng(6);
    let (mut instances, mut skipped, mut failures) = (0, 0, 0);
    let mut bounds = BTreeMap::new();
    while instances < 240 {
        let k = r.random_range(2..=3);
        let count = r.random_range(1..=3);
        let gens: Vec<_> = (0..count)
            .map(|_| sample::element(&mut r, k, 3, mode))
            .collect();
        let longest = gens.iter().map(|g| g.word().len()).max().unwrap();
        let bound = r.random_range(longest.max(1)..=8);
        let Some((racks, _)) = brute(
            &gens,
            bound,
            CAP,
            |x, y, s| x.op(y, s).unwrap(),
            |e| e.word().len(),
        ) else {
            skipped += 1;
            continue;
        };
        let classes: Vec<_> = gens.iter().map(RackElement::project).collect();
        let Some((quandle, q_truncated)) = brute(
            &classes,
            bound,
            CAP,
            |x, y, s| x.op(y, s).unwrap(),
            |q| q.word().len(),
        ) else {
            skipped += 1;
            continue;
        };
        let inside: Vec<_> = racks.iter().cloned().collect();
        let picked = inside[r.random_range(0..inside.len())].clone();
        let mate = picked.project().lift().power(r.random_range(-4..=4));
        let stray = sample::element(&mut r, k, bound, mode);
        for target in [picked, mate, stray] {
            instances += 1;
            *bounds.entry(bound).or_insert(0) += 1;
            let in_rack = racks.contains(&target);
            let in_quandle = quandle.contains(&target.project());
            let ok = match rack_member(&target, &gens, bound).unwrap() {
                MembershipAnswer::Member(w) => in_quandle && w.evaluate(mode).unwrap() == target,
                MembershipAnswer::NonMember(NonMemberReason::BaseNotGenerated(b)) => {
                    !in_rack && !in_quandle && gens.iter().all(|g| g.base() != b)
                }
                MembershipAnswer::NonMember(NonMemberReason::ClosureSaturated { size }) => {
                    !in_rack && !in_quandle && !q_truncated && size == quandle.len()
                }
                MembershipAnswer::Unknown { .. } => !in_rack && !in_quandle && q_truncated,
            };
            if !ok {
                failures += 1;
            }
        }
    }
    verdict(
        failures == 0,
        format!(
            "{instances} instances, {failures} disagreements, {skipped} generator sets over the oracle cap skipped, instances per bound {bounds:?}"
        ),
    )
}

fn involution() -> Verdict {
    let mut r = rng(7);
    let mut failures = 0;
    for _ in 0..5000 {
        let (e, t) = (
            element(&mut r, WordMode::Involutory),
            element(&mut r, WordMode::Involutory),
        );
        let once = e.op(&t, Sign::Pos).unwrap();
        if once.op(&t, Sign::Pos).unwrap() != e || once != e.op(&t, Sign::Neg).unwrap() {
            failures += 1;
        }
    }
    verdict(failures == 0, format!("5000 pairs, {failures} failures"))
}

fn golden_transcript(script: &str, dir: &Path) -> String {
    let mut out = String::new();
    for line in script.lines() {
        let Some(cmd) = line.strip_prefix("$ freerack") else {
            continue;
        };
        let args = shlex::split(cmd).expect("well-quoted script line");
        let run = Command::new(env!("CARGO_BIN_EXE_freerack"))
            .args(&args)
            .current_dir(dir)
            .output()
            .unwrap();
        out.push_str(line);
        out.push('\n');
        out.push_str(&String::from_utf8(run.stdout).unwrap());
        for err in String::from_utf8(run.stderr).unwrap().lines() {
            out.push_str("! ");
            out.push_str(err);
            out.push('\n');
        }
        out.push_str(&format!("[exit {}]\n\n", run.status.code().unwrap()));
    }
    out
}

fn golden() -> Verdict {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let recorded = std::fs::read_to_string(dir.join("cli.txt")).unwrap();
    let produced = golden_transcript(&recorded, &dir);
    if std::env::var_os("FREERACK_BLESS").is_some() {
        std::fs::write(dir.join("cli.txt"), &produced).unwrap();
    }
    let count = recorded
        .lines()
        .filter(|l| l.starts_with("$ freerack"))
        .count();
    let first_diff = recorded
        .lines()
        .zip(produced.lines())
        .position(|(a, b)| a != b)
        .map_or(String::new(), |i| {
            format!(", first difference at line {}", i + 1)
        });
    verdict(
        produced == recorded && count >= 25,
        format!(
            "{count} invocations, byte-identical: {}{first_diff}",
            produced == recorded
        ),
    )
}

fn print(n: usize, name: &str, v: &Verdict) {
    println!(
        "criterion {n} {} {name}: {}",
        if v.pass { "PASS" } else { "FAIL" },
        v.detail
    );
}

#[test]
fn acceptance() {
    let free = WordMode::Free;
    let inv = WordMode::Involutory;
    let mut all = true;
    let mut emit = |n: usize, name: &str, v: Verdict| {
        print(n, name, &v);
        all &= v.pass;
    };

    let (a, b) = (axioms(free), axioms(inv));
    emit(
        1,
        "rack axioms",
        verdict(
            a.pass && b.pass,
            format!("free {}; involutory {}", a.detail, b.detail),
        ),
    );
    let (a, b) = (homomorphism(free), homomorphism(inv));
    emit(
        2,
        "projection homomorphism",
        verdict(
            a.pass && b.pass,
            format!("free {}; involutory {}", a.detail, b.detail),
        ),
    );
    emit(3, "push-power and closed-form power", push_power(free));
    emit(4, "fiber law", fiber(free));
    emit(5, "normal-form uniqueness", normal_forms(free));
    emit(6, "membership against brute force", membership(free));

    let reruns = [
        ("1", axioms(inv)),
        ("2", homomorphism(inv)),
        ("3", push_power(inv)),
        ("4", fiber(inv)),
        ("5", normal_forms(inv)),
        ("6", membership(inv)),
        ("involution", involution()),
    ];
    let pass = reruns.iter().all(|(_, v)| v.pass);
    let detail = reruns
        .iter()
        .map(|(n, v)| {
            format!(
                "[{n}] {} {}",
                if v.pass { "ok" } else { "FAILED" },
                v.detail
            )
        })
        .collect::<Vec<_>>()
        .join("; ");
    emit(7, "involutory suite", verdict(pass, detail));
    emit(8, "CLI golden transcript", golden());

    assert!(all, "some acceptance criteria failed");
}
