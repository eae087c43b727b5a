use std::path::Path;

use conley_core::dynamics::{
    conley_index, count_periodic, enumerate_periodic_oracle, enumerate_signed_periodic,
    lefschetz_series, morse_split_check, zeta_basic_set, zeta_from_index, BasicSetSpec,
    EnumerationCaps, SystemSpec,
};
use conley_core::linalg::{char_reversed, reversed_char_poly};
use conley_core::spectral::{jordan_profile, kernel_chain, nonnilpotent_part};
use conley_core::{BigInt, Error, IntPolynomial, RationalFunction};

use crate::error::{CliError, EXIT_INTERNAL};
use crate::report::{BasicSetReport, Check, Format, Outcome, Report};
use crate::system_file::parse_system;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Index,
    Jordan,
    Zeta,
    Morse,
    Verify,
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub format: Format,
    pub q: Option<usize>,
    /// Largest period checked by brute-force enumeration in `verify`.
    pub max_enum: usize,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            format: Format::Text,
            q: None,
            max_enum: 6,
        }
    }
}

/// Rendered report and the process exit status.
#[derive(Clone, Debug)]
pub struct RunOutput {
    pub stdout: String,
    pub exit_code: u8,
}

pub fn run(command: Command, path: &Path, opts: &Options) -> Result<RunOutput, CliError> {
    let spec = parse_system(path)?;
    run_spec(command, &spec, opts)
}

pub fn run_spec(command: Command, spec: &SystemSpec, opts: &Options) -> Result<RunOutput, CliError> {
    let report = build_report(command, spec, opts)?;
    let exit_code = if report.all_agree() { 0 } else { EXIT_INTERNAL };
    Ok(RunOutput {
        stdout: report.render(opts.format),
        exit_code,
    })
}

pub fn build_report(command: Command, spec: &SystemSpec, opts: &Options) -> Result<Report, CliError> {
    let dim = spec.effective_dim();
    let sets = spec.sorted_basic_sets();
    let mut report = Report {
        command: match command {
            Command::Index => "index",
            Command::Jordan => "jordan",
            Command::Zeta => "zeta",
            Command::Morse => "morse",
            Command::Verify => "verify",
        },
        ambient_dim: dim,
        ..Report::default()
    };
    match command {
        Command::Index => {
            for b in sets {
                let mut r = BasicSetReport::new(b);
                r.nilpotency = nilpotency_index(b)?;
                r.index = Some(conley_index(b, dim)?);
                report.basic_sets.push(r);
            }
        }
        Command::Jordan => {
            for b in sets {
                let mut r = BasicSetReport::new(b);
                r.jordan = Some(jordan_profile(&r.structure)?);
                report.basic_sets.push(r);
            }
        }
        Command::Zeta => {
            let mut product = RationalFunction::one();
            for b in sets {
                let mut r = BasicSetReport::new(b);
                let z = zeta_basic_set(b, dim)?;
                product = product.mul(&z);
                r.zeta = Some(z);
                report.basic_sets.push(r);
            }
            report.zeta_product = Some(product);
        }
        Command::Morse => {
            let q = opts
                .q
                .ok_or_else(|| CliError::Usage("morse needs --q N".into()))?;
            report.morse = Some(morse_split_check(spec, q)?);
        }
        Command::Verify => {
            let mut checks = Vec::new();
            for b in sets {
                verify_basic_set(b, dim, opts.max_enum, &mut checks)?;
            }
            if let Some(q) = spec.split_at {
                let outcome = match morse_split_check(spec, q) {
                    Ok(_) => Outcome::Agree,
                    Err(Error::Invariant(m)) => Outcome::Disagree(m),
                    Err(e) => Outcome::Skipped(e.to_string()),
                };
                checks.push(Check {
                    basic_set: "(system)".into(),
                    name: "Morse identity at split_at",
                    outcome,
                });
            }
            report.checks = Some(checks);
        }
    }
    Ok(report)
}

/// Smallest `k` with `A^k = 0`, or `None` when `A` is not nilpotent.
fn nilpotency_index(b: &BasicSetSpec) -> Result<Option<usize>, CliError> {
    let a = b.structure.matrix().to_rational();
    let n = a.rows();
    let chain = kernel_chain(&a, n + 1)?;
    Ok(chain.iter().position(|&d| d == n))
}

fn agree_if(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Agree
    } else {
        Outcome::Disagree(detail())
    }
}

fn verify_basic_set(
    b: &BasicSetSpec,
    dim: usize,
    max_enum: usize,
    checks: &mut Vec<Check>,
) -> Result<(), CliError> {
    let mut push = |name, outcome| {
        checks.push(Check {
            basic_set: b.name.clone(),
            name,
            outcome,
        })
    };
    let a = b.structure.matrix().to_rational();
    let n = a.rows();
    let plus = nonnilpotent_part(&a)?;

    push(
        "induced map is an automorphism of the eventual image",
        match plus.verify() {
            Ok(()) => Outcome::Agree,
            Err(Error::Invariant(m)) => Outcome::Disagree(m),
            Err(e) => return Err(e.into()),
        },
    );

    let full = char_reversed(&a)?;
    let reduced = IntPolynomial::try_from_rational(&reversed_char_poly(&plus.matrix)?);
    push(
        "det(I - At) = det(I - A+ t)",
        match reduced {
            Ok(r) => agree_if(full == r, || format!("{full} vs {r}")),
            Err(_) => Outcome::Disagree("det(I - A+ t) is not an integer polynomial".into()),
        },
    );

    let direct = zeta_basic_set(b, dim)?;
    let via_index = zeta_from_index(&conley_index(b, dim)?)?;
    push(
        "zeta from structure matrix = zeta from index",
        agree_if(direct == via_index, || format!("{direct} vs {via_index}")),
    );

    let profile = jordan_profile(&a)?;
    let reduced_profile = jordan_profile(&plus.matrix)?;
    push(
        "Jordan profile of A+ drops only eigenvalue 0",
        agree_if(
            profile.dimension() == n && profile.without_zero() == reduced_profile,
            || "profiles differ".into(),
        ),
    );

    let top = n.max(10);
    let series = lefschetz_series(b, top)?;
    let mut p = plus.matrix.clone();
    let mut worst = None;
    for k in 1..=top {
        if k > 1 {
            p = p.mul(&plus.matrix)?;
        }
        let t = p.trace()?;
        if k >= n && t != conley_core::BigRational::from_integer(series[k - 1].clone()) {
            worst.get_or_insert(k);
        }
    }
    push(
        "trace(A^k) = trace(A+^k) for k >= n",
        agree_if(worst.is_none(), || format!("first mismatch at k = {}", worst.unwrap_or(0))),
    );

    // Periods past the default cap are reported as skipped rather than
    // enumerated; the word count grows exponentially.
    let caps = EnumerationCaps::default();
    match b.vertex_shift() {
        None => push(
            "periodic points: trace formula = enumeration",
            Outcome::Skipped("structure matrix is not a signed 0/1 matrix".into()),
        ),
        Some(shift) => {
            let mut unsigned = Outcome::Agree;
            let mut signed = Outcome::Agree;
            for period in 1..=max_enum {
                let brute = match enumerate_periodic_oracle(&shift, period, caps) {
                    Ok(c) => c,
                    Err(Error::Resource(m)) => {
                        unsigned = Outcome::Skipped(m.clone());
                        signed = Outcome::Skipped(m);
                        break;
                    }
                    Err(e) => return Err(e.into()),
                };
                let formula = count_periodic(&shift, period)?;
                if formula != BigInt::from(brute) && unsigned == Outcome::Agree {
                    unsigned = Outcome::Disagree(format!("period {period}: trace {formula}, enumerated {brute}"));
                }
                let brute_signed = enumerate_signed_periodic(&shift, period, caps)?;
                let trace = match series.get(period - 1) {
                    Some(t) => t.clone(),
                    None => b.structure.matrix().pow(period as u32)?.trace()?,
                };
                if trace != BigInt::from(brute_signed) && signed == Outcome::Agree {
                    signed = Outcome::Disagree(format!(
                        "period {period}: trace {trace}, signed count {brute_signed}"
                    ));
                }
            }
            if max_enum == 0 {
                unsigned = Outcome::Skipped("--max-enum is 0".into());
                signed = Outcome::Skipped("--max-enum is 0".into());
            }
            push("periodic points: trace formula = enumeration", unsigned);
            push("signed periodic points = trace(A^n)", signed);
        }
    }
    Ok(())
}
