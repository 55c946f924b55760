//! The `bench` subcommand: the input-sensitivity workload (letters inspected
//! by the input-sensitive comparator versus the V-form comparator) and the
//! incremental-transform scaling workload over factor counts.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use vorder::{
    bwt_incremental, compare_input_sensitive_report, compare_v_form_counting, factorize, Letter,
};

pub struct SensitivityRow {
    pub n: usize,
    pub mismatch: usize,
    pub window: usize,
    pub input_sensitive_letters: u64,
    pub v_form_letters: u64,
}

pub struct ScalingRow {
    pub factors: usize,
    pub n: usize,
    pub time: Duration,
}

pub struct BenchReport {
    pub sensitivity: Vec<SensitivityRow>,
    pub scaling: Vec<ScalingRow>,
}

impl BenchReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "input sensitivity (letters inspected after the max/count scan)");
        let _ = writeln!(
            out,
            "{:>8} {:>8} {:>8} {:>18} {:>14}",
            "n", "mismatch", "window", "input_sensitive", "v_form"
        );
        for row in &self.sensitivity {
            let _ = writeln!(
                out,
                "{:>8} {:>8} {:>8} {:>18} {:>14}",
                row.n, row.mismatch, row.window, row.input_sensitive_letters, row.v_form_letters
            );
        }
        let _ = writeln!(out);
        let _ = writeln!(out, "incremental transform scaling (best of 3, fixed length)");
        let _ = writeln!(out, "{:>8} {:>8} {:>12}", "factors", "n", "time");
        for row in &self.scaling {
            let _ = writeln!(
                out,
                "{:>8} {:>8} {:>12}",
                row.factors,
                row.n,
                format!("{:.3?}", row.time)
            );
        }
        if let (Some(first), Some(last)) = (self.scaling.first(), self.scaling.last()) {
            let ratio = last.time.as_secs_f64() / first.time.as_secs_f64().max(1e-9);
            let _ = writeln!(
                out,
                "growth t({})/t({}) = {:.2}, quadratic envelope bound = {}",
                last.factors,
                first.factors,
                ratio,
                last.factors * last.factors
            );
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let sensitivity: Vec<serde_json::Value> = self
            .sensitivity
            .iter()
            .map(|r| {
                serde_json::json!({
                    "n": r.n,
                    "mismatch": r.mismatch,
                    "window": r.window,
                    "input_sensitive_letters": r.input_sensitive_letters,
                    "v_form_letters": r.v_form_letters,
                })
            })
            .collect();
        let scaling: Vec<serde_json::Value> = self
            .scaling
            .iter()
            .map(|r| {
                serde_json::json!({
                    "factors": r.factors,
                    "n": r.n,
                    "micros": r.time.as_micros() as u64,
                })
            })
            .collect();
        serde_json::json!({ "input_sensitivity": sensitivity, "scaling": scaling })
    }
}

pub fn run(seed: u64) -> BenchReport {
    BenchReport { sensitivity: sensitivity_rows(seed), scaling: scaling_rows() }
}

/// A pair over {1,2,3,4} with maximal letter 4, equal counts, first mismatch
/// at `mismatch`, and `window` filler letters before the next maximal letter.
fn sensitivity_pair(
    rng: &mut StdRng,
    n: usize,
    mismatch: usize,
    window: usize,
) -> (Vec<Letter>, Vec<Letter>) {
    assert!(mismatch + window + 1 < n);
    let common: Vec<Letter> = (0..mismatch - 1).map(|_| rng.random_range(1..=3)).collect();
    let mut x = common.clone();
    let mut y = common;
    x.push(1);
    y.push(2);
    let filler: Vec<Letter> = (0..window).map(|_| rng.random_range(1..=3)).collect();
    x.extend_from_slice(&filler);
    y.extend_from_slice(&filler);
    x.push(4);
    y.push(4);
    let tail: Vec<Letter> =
        (0..n - mismatch - window - 1).map(|_| rng.random_range(1..=4)).collect();
    x.extend_from_slice(&tail);
    y.extend_from_slice(&tail);
    (x, y)
}

fn sensitivity_rows(seed: u64) -> Vec<SensitivityRow> {
    let window = 16usize;
    let mut rows = Vec::new();
    for &mismatch in &[10usize, 100, 1000] {
        for &n in &[10_000usize, 100_000] {
            let mut rng = StdRng::seed_from_u64(seed ^ (mismatch as u64));
            let (x, y) = sensitivity_pair(&mut rng, n, mismatch, window);
            let report = compare_input_sensitive_report(&x, &y);
            let (_, v_form_letters) = compare_v_form_counting(&x, &y);
            rows.push(SensitivityRow {
                n,
                mismatch,
                window,
                input_sensitive_letters: report.letters_inspected,
                v_form_letters,
            });
        }
    }
    rows
}

/// A string of length `n` factoring into exactly `k` V-words: ascending
/// leading letters over runs of 1s, the remainder in the last factor.
fn scaling_input(n: usize, k: usize) -> Vec<Letter> {
    let base = n / k;
    let mut x = Vec::with_capacity(n);
    for i in 1..=k as u32 {
        let len = if i == k as u32 { n - x.len() } else { base };
        x.push(2 + i);
        x.extend(std::iter::repeat_n(1, len - 1));
    }
    x
}

fn scaling_rows() -> Vec<ScalingRow> {
    let n = 512usize;
    (1..=16)
        .map(|k| {
            let x = scaling_input(n, k);
            debug_assert_eq!(factorize(&x).expect("nonempty").len(), k);
            let mut best = Duration::MAX;
            for _ in 0..3 {
                let started = Instant::now();
                std::hint::black_box(bwt_incremental(&x).expect("nonempty"));
                best = best.min(started.elapsed());
            }
            ScalingRow { factors: k, n, time: best }
        })
        .collect()
}
