//! End-to-end acceptance checks for the diagram/necklace bijection.
//!
//! One orchestrating test runs every criterion and prints a single
//! PASS/FAIL line per criterion; it fails if any criterion fails. Run with
//! `cargo test -p positroid --test acceptance -- --nocapture` to see the
//! lines as they are produced.

use positroid::text::{self, TermStyle};
use positroid::{
    enumerate_le, enumerate_necklaces, enumerate_shapes, json, le_from_necklace,
    necklace_from_le, path_from, positroid_dimension, GrassmannNecklace, LabeledShape, LeDiagram,
    Square, Strictness,
};
use std::collections::BTreeSet;
use std::io::Write as _;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

/// Budget for a single conversion of the worked examples, pinned.
const CONVERSION_BUDGET: Duration = Duration::from_millis(1);
/// Budget for each exhaustive sweep over all types with n at most 6, pinned.
const SWEEP_BUDGET: Duration = Duration::from_secs(60);
/// Every type (k, n) with 0 < k < n and n at most this bound is swept.
const SWEEP_MAX_N: u32 = 6;
/// Serialization identity is checked on every object up to this bound.
const SERIALIZATION_MAX_N: u32 = 5;

/// Known object counts per type: (k, n, count). The number of valid
/// diagram fillings must equal the number of valid necklaces.
const FROZEN_COUNTS: [(u32, u32, usize); 15] = [
    (1, 2, 3),
    (1, 3, 7),
    (2, 3, 7),
    (1, 4, 15),
    (2, 4, 33),
    (3, 4, 15),
    (1, 5, 31),
    (2, 5, 131),
    (3, 5, 131),
    (4, 5, 31),
    (1, 6, 63),
    (2, 6, 473),
    (3, 6, 883),
    (4, 6, 473),
    (5, 6, 63),
];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn sq(row: u32, col: u32) -> Square {
    Square::new(row, col)
}

/// The worked example: rank 3 on ground set 1..8, rows {1, 3, 6}.
fn golden_diagram() -> LeDiagram {
    let shape = LabeledShape::from_rows(3, 8, &[1, 3, 6]).unwrap();
    LeDiagram::new(
        shape,
        [
            sq(1, 2),
            sq(1, 7),
            sq(1, 8),
            sq(3, 4),
            sq(3, 7),
            sq(3, 8),
            sq(6, 7),
        ],
    )
}

fn golden_diagram_necklace() -> Vec<Vec<u32>> {
    vec![
        vec![1, 3, 6],
        vec![2, 3, 6],
        vec![3, 6, 7],
        vec![4, 6, 7],
        vec![6, 7, 8],
        vec![6, 7, 8],
        vec![1, 7, 8],
        vec![1, 6, 8],
    ]
}

/// The worked example in the other direction: rank 4 on ground set 1..8.
fn golden_necklace() -> GrassmannNecklace {
    GrassmannNecklace::new(
        4,
        8,
        vec![
            vec![1, 2, 4, 7],
            vec![2, 3, 4, 7],
            vec![3, 4, 7, 8],
            vec![4, 6, 7, 8],
            vec![5, 6, 7, 8],
            vec![4, 6, 7, 8],
            vec![1, 4, 7, 8],
            vec![1, 4, 7, 8],
        ],
    )
    .unwrap()
}

fn golden_necklace_plus() -> BTreeSet<Square> {
    [sq(1, 3), sq(1, 8), sq(2, 3), sq(2, 6), sq(2, 8), sq(4, 5)]
        .into_iter()
        .collect()
}

fn types_up_to(max_n: u32) -> impl Iterator<Item = (u32, u32)> {
    (2..=max_n).flat_map(|n| (1..n).map(move |k| (k, n)))
}

/// Smallest observed duration over several runs, after one warm-up run.
fn time_best(runs: u32, mut f: impl FnMut()) -> Duration {
    f();
    (0..runs)
        .map(|_| {
            let t = Instant::now();
            f();
            t.elapsed()
        })
        .min()
        .unwrap()
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

/// Forward conversion reproduces the worked example exactly, including the
/// individual walks, within the conversion budget.
fn a1_forward_golden() -> Outcome {
    let d = golden_diagram();
    let nk = necklace_from_le(&d).map_err(|e| e.to_string())?;
    if nk.terms() != golden_diagram_necklace().as_slice() {
        return Err(format!(
            "terms {:?} differ from the expected list",
            nk.terms()
        ));
    }

    let walk4 = path_from(&d, 4).map_err(|e| e.to_string())?;
    if walk4 != [sq(3, 4), sq(1, 7)] {
        return Err(format!("walk for boundary index 4 was {walk4:?}"));
    }
    let walk5 = path_from(&d, 5).map_err(|e| e.to_string())?;
    if walk5 != [sq(3, 7), sq(1, 8)] {
        return Err(format!("walk for boundary index 5 was {walk5:?}"));
    }

    let best = time_best(10, || {
        necklace_from_le(&d).unwrap();
    });
    if best > CONVERSION_BUDGET {
        return Err(format!(
            "conversion took {best:?} (budget {CONVERSION_BUDGET:?})"
        ));
    }
    Ok(format!("8 terms, best of 10 in {best:?}"))
}

/// Reverse conversion reproduces the worked example exactly, the forward
/// conversion returns the original necklace, and both fit the budget.
fn a2_reverse_golden() -> Outcome {
    let nk = golden_necklace();
    let d = le_from_necklace(&nk).map_err(|e| e.to_string())?;
    if d.shape().row_labels() != [1, 2, 4, 7] {
        return Err(format!(
            "rows {:?} differ from [1, 2, 4, 7]",
            d.shape().row_labels()
        ));
    }
    if *d.plus_squares() != golden_necklace_plus() {
        return Err(format!("plus squares {:?} differ", d.plus_squares()));
    }
    if positroid_dimension(&d) != 6 {
        return Err(format!(
            "dimension {} differs from 6",
            positroid_dimension(&d)
        ));
    }
    let back = necklace_from_le(&d).map_err(|e| e.to_string())?;
    if back != nk {
        return Err("forward conversion does not return the original necklace".into());
    }

    let best = time_best(10, || {
        le_from_necklace(&nk).unwrap();
    });
    if best > CONVERSION_BUDGET {
        return Err(format!(
            "conversion took {best:?} (budget {CONVERSION_BUDGET:?})"
        ));
    }
    Ok(format!("dimension 6, best of 10 in {best:?}"))
}

/// Every valid diagram with n <= 6 survives the round trip through its
/// necklace unchanged.
fn a3_diagram_round_trip() -> Outcome {
    let start = Instant::now();
    let mut checked = 0usize;
    for (k, n) in types_up_to(SWEEP_MAX_N) {
        for d in enumerate_le(k, n).map_err(|e| e.to_string())? {
            let nk = necklace_from_le(&d).map_err(|e| format!("forward failed on {d:?}: {e}"))?;
            let back =
                le_from_necklace(&nk).map_err(|e| format!("reverse failed on {nk:?}: {e}"))?;
            if back != d {
                return Err(format!("round trip changed {d:?} into {back:?}"));
            }
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    if elapsed > SWEEP_BUDGET {
        return Err(format!("sweep took {elapsed:?} (budget {SWEEP_BUDGET:?})"));
    }
    Ok(format!("{checked} diagrams in {elapsed:?}"))
}

/// Every valid necklace with n <= 6 survives the round trip through its
/// diagram unchanged.
fn a4_necklace_round_trip() -> Outcome {
    let start = Instant::now();
    let mut checked = 0usize;
    for (k, n) in types_up_to(SWEEP_MAX_N) {
        for nk in enumerate_necklaces(k, n).map_err(|e| e.to_string())? {
            let d = le_from_necklace(&nk).map_err(|e| format!("reverse failed on {nk:?}: {e}"))?;
            let back = necklace_from_le(&d).map_err(|e| format!("forward failed on {d:?}: {e}"))?;
            if back != nk {
                return Err(format!("round trip changed {nk:?} into {back:?}"));
            }
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    if elapsed > SWEEP_BUDGET {
        return Err(format!("sweep took {elapsed:?} (budget {SWEEP_BUDGET:?})"));
    }
    Ok(format!("{checked} necklaces in {elapsed:?}"))
}

/// Object counts per type match the frozen table, the shape counts match
/// the binomial coefficients, and the two object classes are equinumerous.
fn a5_counts() -> Outcome {
    fn binomial(n: u32, k: u32) -> usize {
        (1..=k as usize).fold(1usize, |acc, i| acc * (n as usize - k as usize + i) / i)
    }
    let mut table: Vec<(u32, u32)> = types_up_to(SWEEP_MAX_N).collect();
    table.sort();
    let mut frozen: Vec<(u32, u32)> = FROZEN_COUNTS.iter().map(|&(k, n, _)| (k, n)).collect();
    frozen.sort();
    if table != frozen {
        return Err("the frozen table does not cover exactly the swept types".into());
    }
    for &(k, n, expected) in &FROZEN_COUNTS {
        let shapes = enumerate_shapes(k, n).map_err(|e| e.to_string())?.count();
        if shapes != binomial(n, k) {
            return Err(format!(
                "({k}, {n}): {shapes} shapes, expected {}",
                binomial(n, k)
            ));
        }
        let le = enumerate_le(k, n).map_err(|e| e.to_string())?.count();
        let gn = enumerate_necklaces(k, n)
            .map_err(|e| e.to_string())?
            .count();
        if le != expected || gn != expected {
            return Err(format!(
                "({k}, {n}): {le} diagrams and {gn} necklaces, expected {expected} of each"
            ));
        }
    }
    Ok(format!("{} types checked", FROZEN_COUNTS.len()))
}

/// The walks of a diagram cover its plus squares exactly: every plus
/// square is stepped on by some walk and walks never leave the plus set.
fn a6_walk_coverage() -> Outcome {
    let mut checked = 0usize;
    for (k, n) in types_up_to(SWEEP_MAX_N) {
        for d in enumerate_le(k, n).map_err(|e| e.to_string())? {
            let mut union = BTreeSet::new();
            for i in 2..=n {
                for s in path_from(&d, i).map_err(|e| e.to_string())? {
                    if !d.is_plus(s) {
                        return Err(format!("walk for {i} stepped on non-plus {s} in {d:?}"));
                    }
                    union.insert(s);
                }
            }
            if union != *d.plus_squares() {
                let missing: Vec<_> = d.plus_squares().difference(&union).collect();
                return Err(format!("squares {missing:?} never visited in {d:?}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} diagrams covered"))
}

/// On every valid diagram, the nearest-plus queries agree with an
/// independent brute-force scan and the selected square dominates every
/// other candidate.
fn a7_dominance() -> Outcome {
    // the rule under test, re-derived here from scratch: candidates to the
    // upper left (weakly larger column label, weakly smaller row label),
    // pick the lowest row and the leftmost-in-reading-order (smallest)
    // column among them, and demand that pick dominates all candidates
    fn brute(d: &LeDiagram, s: Square, strict: bool) -> Result<Option<Square>, String> {
        let candidates: Vec<Square> = d
            .plus_squares()
            .iter()
            .copied()
            .filter(|p| {
                if strict {
                    p.row < s.row && p.col > s.col
                } else {
                    p.row <= s.row && p.col >= s.col
                }
            })
            .collect();
        let Some(max_row) = candidates.iter().map(|p| p.row).max() else {
            return Ok(None);
        };
        let chosen = candidates
            .iter()
            .copied()
            .filter(|p| p.row == max_row)
            .min_by_key(|p| p.col)
            .unwrap();
        for c in &candidates {
            if !(c.row <= chosen.row && c.col >= chosen.col) {
                return Err(format!(
                    "candidate {c} is not dominated by {chosen} for query {s} in {d:?}"
                ));
            }
        }
        Ok(Some(chosen))
    }

    let mut queries = 0usize;
    for (k, n) in types_up_to(SWEEP_MAX_N) {
        for d in enumerate_le(k, n).map_err(|e| e.to_string())? {
            let squares: Vec<Square> = d.shape().squares().collect();
            for s in squares {
                let weak = d.nearest_plus_weak_nw(s).map_err(|e| e.to_string())?;
                if weak != brute(&d, s, false)? {
                    return Err(format!("weak query at {s} disagrees in {d:?}"));
                }
                let strict = d.nearest_plus_strict_nw(s).map_err(|e| e.to_string())?;
                if strict != brute(&d, s, true)? {
                    return Err(format!("strict query at {s} disagrees in {d:?}"));
                }
                queries += 2;
            }
        }
    }
    Ok(format!("{queries} queries certified"))
}

/// Axiom validation: the worked example is valid in the lenient sense and
/// fails strictly exactly at index 7; the constant necklace on the top
/// labels is lenient-valid and strictly fails exactly at those labels.
fn a8_axiom_validation() -> Outcome {
    let nk = golden_necklace();
    if !nk.validate(Strictness::Lenient).is_valid() {
        return Err("worked example rejected by lenient validation".into());
    }
    let strict = nk.validate(Strictness::Strict);
    let at: Vec<u32> = strict.failures.iter().map(|f| f.index).collect();
    if at != [7] {
        return Err(format!("strict failures at {at:?}, expected [7]"));
    }

    for (k, n) in types_up_to(SWEEP_MAX_N) {
        let top: Vec<u32> = (n - k + 1..=n).collect();
        let nk = GrassmannNecklace::new(k, n, vec![top.clone(); n as usize])
            .map_err(|e| e.to_string())?;
        if !nk.validate(Strictness::Lenient).is_valid() {
            return Err(format!("constant necklace on {top:?} rejected leniently"));
        }
        let at: Vec<u32> = nk
            .validate(Strictness::Strict)
            .failures
            .iter()
            .map(|f| f.index)
            .collect();
        if at != top {
            return Err(format!(
                "constant necklace on {top:?} fails strictly at {at:?}"
            ));
        }
    }
    Ok("worked example and all constant top-label necklaces behave".into())
}

/// Parsing is a left inverse of rendering in both wire formats for every
/// object with n <= 5, and the command-line tool is byte-deterministic.
fn a9_serialization_and_cli() -> Outcome {
    for (k, n) in types_up_to(SERIALIZATION_MAX_N) {
        for d in enumerate_le(k, n).map_err(|e| e.to_string())? {
            let t = text::render_diagram(&d);
            if text::parse_diagram(&t).map_err(|e| e.to_string())? != d {
                return Err(format!("text round trip changed {t:?}"));
            }
            let j = json::diagram_to_json(&d);
            if json::diagram_from_json(&j).map_err(|e| e.to_string())? != d {
                return Err(format!("JSON round trip changed {j}"));
            }
        }
        for nk in enumerate_necklaces(k, n).map_err(|e| e.to_string())? {
            for style in [TermStyle::Compact, TermStyle::Braces] {
                let t = text::render_necklace(&nk, style);
                if text::parse_necklace(&t).map_err(|e| e.to_string())? != nk {
                    return Err(format!("text round trip changed {t:?}"));
                }
            }
            let j = json::necklace_to_json(&nk);
            if json::necklace_from_json(&j).map_err(|e| e.to_string())? != nk {
                return Err(format!("JSON round trip changed {j}"));
            }
        }
    }

    let exe = env!("CARGO_BIN_EXE_positroid");
    let golden = text::render_diagram(&golden_diagram());

    let run_stdin = |args: &[&str], input: &str| -> Result<(Vec<u8>, i32), String> {
        let mut child = Command::new(exe)
            .args(args)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .map_err(|e| e.to_string())?;
        child
            .stdin
            .take()
            .unwrap()
            .write_all(input.as_bytes())
            .map_err(|e| e.to_string())?;
        let out = child.wait_with_output().map_err(|e| e.to_string())?;
        Ok((out.stdout, out.status.code().unwrap_or(-1)))
    };

    let (first, code) = run_stdin(&["le2gn", "-"], &golden)?;
    if code != 0 {
        return Err(format!("le2gn exited with {code}"));
    }
    if first != b"136,236,367,467,678,678,178,168\n" {
        return Err(format!(
            "le2gn printed {:?}",
            String::from_utf8_lossy(&first)
        ));
    }
    let (second, _) = run_stdin(&["le2gn", "-"], &golden)?;
    if first != second {
        return Err("two identical le2gn runs differed".into());
    }

    let necklace_text = "1247,2347,3478,4678,5678,4678,1478,1478";
    let (diagram_out, code) = run_stdin(&["gn2le"], necklace_text)?;
    if code != 0 {
        return Err(format!("gn2le exited with {code}"));
    }
    if diagram_out != b"4 8 rows=1,2,4,7\n+00+\n++0+\n00+\n0\n" {
        return Err(format!(
            "gn2le printed {:?}",
            String::from_utf8_lossy(&diagram_out)
        ));
    }

    let enumerate = |_: ()| -> Result<Vec<u8>, String> {
        let out = Command::new(exe)
            .args(["enumerate", "--k", "2", "--n", "4", "--what", "gn"])
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("enumerate exited with {:?}", out.status.code()));
        }
        Ok(out.stdout)
    };
    let one = enumerate(())?;
    let two = enumerate(())?;
    if one != two {
        return Err("two identical enumerate runs differed".into());
    }
    if one.iter().filter(|&&b| b == b'\n').count() != 33 {
        return Err("enumerate did not print 33 necklaces".into());
    }

    Ok("all objects with n <= 5 round trip; tool output is byte-stable".into())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        (
            "A1 forward conversion reproduces the worked example",
            a1_forward_golden,
        ),
        (
            "A2 reverse conversion reproduces the worked example",
            a2_reverse_golden,
        ),
        (
            "A3 diagram round trip over all types with n <= 6",
            a3_diagram_round_trip,
        ),
        (
            "A4 necklace round trip over all types with n <= 6",
            a4_necklace_round_trip,
        ),
        ("A5 object counts match the frozen table", a5_counts),
        ("A6 walks cover the plus squares exactly", a6_walk_coverage),
        (
            "A7 nearest-plus queries are dominant and correct",
            a7_dominance,
        ),
        (
            "A8 axiom validation matches the expected failure sets",
            a8_axiom_validation,
        ),
        (
            "A9 serialization identities and tool determinism",
            a9_serialization_and_cli,
        ),
    ];

    let mut failures = Vec::new();
    for (name, criterion) in criteria {
        match criterion() {
            Ok(detail) => println!("PASS  {name} — {detail}"),
            Err(reason) => {
                println!("FAIL  {name} — {reason}");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
