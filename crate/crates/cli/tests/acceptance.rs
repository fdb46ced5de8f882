//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. All comparisons are exact.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use fibsection::verify::{run_suite, Report, Suite, SweepBounds};
use fibsection::{
    binet_fib_lucas, conv_coeff, conv_oracle, conv_rational, conv_terms, fib, golden_pow,
    h0_shortcut, section_gf, section_terms, BigInt, GoldenInt, Kind, Route, SectionParams,
};
use fibsection_cli::{run, OutputRecord, EXIT_OK};

const PROP_LIMIT: Duration = Duration::from_secs(5);
const THEOREM_LIMIT: Duration = Duration::from_secs(30);

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn cli(args: &[String]) -> fibsection_cli::Outcome {
    run(std::iter::once("fibsection".to_owned()).chain(args.iter().cloned()))
}

fn words(s: &str) -> Vec<String> {
    s.split_whitespace().map(str::to_owned).collect()
}

fn full_report(r: &Report) -> Verdict {
    if r.ok() {
        Ok(format!("{} checks", r.total()))
    } else {
        let first: Vec<_> = r.failures().take(3).map(|c| c.label.clone()).collect();
        Err(format!("{} of {} failed, e.g. {first:?}", r.failed(), r.total()))
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Verdict) -> Verdict {
    let start = Instant::now();
    let v = f()?;
    let took = start.elapsed();
    if took < limit {
        Ok(format!("{v} in {:.2}s", took.as_secs_f64()))
    } else {
        Err(format!("{v} but took {:.2}s (limit {}s)", took.as_secs_f64(), limit.as_secs()))
    }
}

/// 1. Generating function expansion equals direct terms, d ∈ [1,12],
///    h ∈ [−3, d+3], both kinds, 64 terms.
fn prop_sweep() -> Verdict {
    timed(PROP_LIMIT, || {
        let mut count = 0;
        for kind in [Kind::Fibonacci, Kind::Lucas] {
            for d in 1..=12 {
                for h in -3..=d + 3 {
                    let gf = section_gf(d, h, kind).map_err(|e| e.to_string())?;
                    let p = SectionParams::new(d, h, 0).unwrap().with_kind(kind);
                    if gf.expand(64).into_coeffs() != section_terms(&p, 64) {
                        return Err(format!("{kind} d={d} h={h}"));
                    }
                    count += 1;
                }
            }
        }
        Ok(format!("{count} sections"))
    })
}

/// 2. `section --d 2 --h 0` gives the coefficients of z/(1−3z+z²).
fn displayed_example() -> Verdict {
    let out = cli(&words("section --d 2 --h 0 --terms 20 --format plain"));
    if out.code != EXIT_OK {
        return Err(out.stderr);
    }
    let got: Vec<BigInt> = out
        .stdout
        .split_whitespace()
        .map(|t| t.parse().unwrap())
        .collect();
    let expected: Vec<BigInt> = (0..20).map(|n| fib(2 * n)).collect();
    let head: Vec<BigInt> = [0, 1, 3, 8, 21, 55].into_iter().map(BigInt::from).collect();
    if got == expected && got[..6] == head[..] {
        Ok("20 terms equal F_{2n}".to_owned())
    } else {
        Err(format!("got {}", out.stdout.trim()))
    }
}

/// 3. Closed = Cauchy-power oracle = rational expansion, d ∈ [1,8],
///    h ∈ [0,d−1], s ∈ [0,4], 40 coefficients.
fn theorem_sweep() -> Verdict {
    timed(THEOREM_LIMIT, || {
        let mut count = 0;
        for d in 1..=8 {
            for h in 0..d {
                for s in 0..=4 {
                    let p = SectionParams::new(d, h, s).unwrap();
                    let closed = conv_terms(&p, 40);
                    if closed != conv_oracle(&p, 40) || closed != conv_rational(&p, 40) {
                        return Err(format!("d={d} h={h} s={s}"));
                    }
                    count += 1;
                }
            }
        }
        Ok(format!("{count} tuples x 40 coefficients"))
    })
}

/// 4. h = 0 shortcut equals the general closed form.
fn h0_collapse() -> Verdict {
    let mut count = 0;
    for d in 1..=10 {
        for s in 0..=4 {
            let p = SectionParams::new(d, 0, s).unwrap();
            for n in 0..=40 {
                let short = h0_shortcut(d, s, n).map_err(|e| e.to_string())?;
                if short != conv_coeff(&p, n) {
                    return Err(format!("d={d} s={s} n={n}"));
                }
                count += 1;
            }
        }
    }
    let r = run_suite(Suite::H0, SweepBounds::default());
    full_report(&r).map(|_| format!("{count} coefficients"))
}

/// 5. Explicit signed Chebyshev sums equal the series expansion with x
///    formal, n ≤ 50, s ≤ 5, both signs.
fn chebyshev_series() -> Verdict {
    let r = run_suite(
        Suite::Chebyshev,
        SweepBounds {
            max_s: Some(5),
            max_n: Some(50),
            ..Default::default()
        },
    );
    full_report(&r)
}

/// 6. ∂Ū_n^{(s)} = 2(s+1) Ū_{n−1}^{(s+1)}, n ∈ [1,40], s ∈ [0,4], both signs.
fn ladder() -> Verdict {
    let r = run_suite(
        Suite::Ladder,
        SweepBounds {
            max_s: Some(4),
            max_n: Some(40),
            ..Default::default()
        },
    );
    full_report(&r)
}

/// 7. Golden-ring Binet route equals fast doubling on [0, 2000], and
///    F_10000 agrees digit for digit.
fn binet_exactness() -> Verdict {
    for n in 0..=2000 {
        if binet_fib_lucas(n) != (fib(n), lucas_of(n)) {
            return Err(format!("n={n}"));
        }
    }
    let doubling = fib(10000).to_string();
    let ring = golden_pow(&GoldenInt::alpha(), 10000).b.to_string();
    let binet = binet_fib_lucas(10000).0.to_string();
    if doubling.len() != 2090 {
        return Err(format!("F_10000 has {} digits", doubling.len()));
    }
    if doubling == ring && doubling == binet {
        Ok("2001 indices; F_10000 2090 digits equal".to_owned())
    } else {
        Err("F_10000 differs between routes".to_owned())
    }
}

fn lucas_of(n: i64) -> BigInt {
    fibsection::lucas(n)
}

fn json_matches_plain(args: &[String]) -> Result<(), String> {
    let plain = cli(args);
    let mut json_args = args.to_vec();
    json_args.extend(words("--format json"));
    let json = cli(&json_args);
    if plain.code != json.code {
        return Err(format!("{args:?}: exit codes differ"));
    }
    let rec: OutputRecord = serde_json::from_str(&json.stdout).map_err(|e| e.to_string())?;
    let mut from_json = rec.terms;
    if let Some(gf) = rec.gf {
        from_json.extend(gf.num);
        from_json.extend(gf.den);
    }
    let from_plain: Vec<String> = plain
        .stdout
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| t.parse::<BigInt>().is_ok())
        .map(str::to_owned)
        .collect();
    if from_json == from_plain {
        Ok(())
    } else {
        Err(format!("{args:?}: json {from_json:?} vs plain {from_plain:?}"))
    }
}

/// 8. Golden plain outputs are byte-identical; JSON round-trips plain over
///    every tuple of the prop and theorem sweeps and every verify suite.
fn cli_golden() -> Verdict {
    let golden = [
        ("section --d 2 --h 0 --terms 6 --format plain", "0 1 3 8 21 55\n"),
        ("conv --d 2 --h 1 --s 0 --terms 4", "1 2 5 13\n"),
        ("conv --d 2 --h 1 --s 1 --terms 5 --route closed", "1 4 14 46 145\n"),
        ("conv --d 2 --h 1 --s 1 --terms 5 --route oracle", "1 4 14 46 145\n"),
    ];
    for (args, want) in golden {
        let out = cli(&words(args));
        if out.code != EXIT_OK || out.stdout != want {
            return Err(format!("`{args}` printed {:?}", out.stdout));
        }
    }

    let mut count = 0;
    for lucas in [false, true] {
        for d in 1..=12i64 {
            for h in -3..=d + 3 {
                let mut args = words(&format!("section --d {d} --h {h} --terms 64"));
                if lucas {
                    args.push("--lucas".to_owned());
                }
                json_matches_plain(&args)?;
                args.push("--gf".to_owned());
                json_matches_plain(&args)?;
                count += 2;
            }
        }
    }
    for d in 1..=8i64 {
        for h in 0..d {
            for s in 0..=4 {
                for route in Route::ALL {
                    json_matches_plain(&words(&format!(
                        "conv --d {d} --h {h} --s {s} --terms 40 --route {route}"
                    )))?;
                    count += 1;
                }
            }
        }
    }
    for suite in Suite::ALL {
        json_matches_plain(&words(&format!("verify --suite {suite}")))?;
        count += 1;
    }
    Ok(format!("golden outputs identical; {count} JSON round-trips"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 prop sweep", prop_sweep),
        ("2 displayed example z/(1-3z+z^2)", displayed_example),
        ("3 theorem sweep (closed = oracle = rational)", theorem_sweep),
        ("4 h=0 collapse", h0_collapse),
        ("5 chebyshev explicit vs series", chebyshev_series),
        ("6 ladder relation", ladder),
        ("7 binet exactness", binet_exactness),
        ("8 cli golden files and json round-trip", cli_golden),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
