//! `root` — stream the digits of an r-th root.
//!
//! Digits are written as the machines produce them, so piping into `head`
//! ends the run early. `--trace` prints one line per rule application
//! instead; `--json` collects the run into a single document.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use rootspigot::cbrt::{QuintMachine, SubtractiveCbrt};
use rootspigot::groups::GroupStream;
use rootspigot::metaroot::{FloatMachine, MetaMachine};
use rootspigot::sqrt::{PairMachine, SubtractiveSqrt};
use rootspigot::{Error, Step, MAX_DEGREE};

const EXIT_USAGE: u8 = 2;
const EXIT_PRECISION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "root",
    about = "Extract the decimal digits of an r-th root, one digit at a time",
    after_help = "Examples:\n  root 2                          50 digits of sqrt(2)\n  root --degree 3 --digits 20 7   20 digits of the cube root of 7\n  root --degree 5 --digits 201 7  the fifth root of 7\n  root --degree 2 --trace 3       rule-by-rule trace of sqrt(3)\n  root --degree 3.14 --digits 4 2.71   float mode, non-integer degree"
)]
struct Args {
    /// Root degree: an integer >= 2, or a non-integer value > 1 for the
    /// approximate float mode
    #[arg(long, default_value = "2")]
    degree: f64,

    /// How many digits to emit
    #[arg(long, default_value_t = 50)]
    digits: usize,

    /// Algorithm variant (defaults per degree: pair for 2, quint for 3,
    /// meta otherwise; float for non-integer degrees)
    #[arg(long, value_enum)]
    variant: Option<Variant>,

    /// Print one line per rule application instead of the digit stream
    #[arg(long, conflicts_with = "json")]
    trace: bool,

    /// Print a single JSON document instead of the digit stream
    #[arg(long)]
    json: bool,

    /// The radicand: a non-negative decimal literal like 7, 23456 or 2.3456
    input: String,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Variant {
    Pair,
    Subtractive,
    Quint,
    Meta,
    Float,
}

impl Variant {
    fn name(self) -> &'static str {
        match self {
            Variant::Pair => "pair",
            Variant::Subtractive => "subtractive",
            Variant::Quint => "quint",
            Variant::Meta => "meta",
            Variant::Float => "float",
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        // clap exits 2 on usage errors and 0 on --help/--version
        Err(e) => e.exit(),
    };
    match run(&args) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("root: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn lib_err(e: Error) -> String {
    e.to_string()
}

fn run(args: &Args) -> Result<ExitCode, String> {
    if args.digits == 0 {
        return Err("--digits must be at least 1".into());
    }

    let integral = args.degree.fract() == 0.0 && args.degree.is_finite();
    let variant = args.variant.unwrap_or(if !integral {
        Variant::Float
    } else if args.degree == 2.0 {
        Variant::Pair
    } else if args.degree == 3.0 {
        Variant::Quint
    } else {
        Variant::Meta
    });

    if variant == Variant::Float {
        return run_float(args);
    }

    if !integral || args.degree < 2.0 || args.degree > MAX_DEGREE as f64 {
        return Err(format!(
            "integer degree must be in 2..={MAX_DEGREE}, got {}; non-integer degrees run in float mode",
            args.degree
        ));
    }
    let degree = args.degree as u32;
    let valid = match variant {
        Variant::Pair => degree == 2,
        Variant::Subtractive => degree == 2 || degree == 3,
        Variant::Quint => degree == 3,
        Variant::Meta => true,
        Variant::Float => unreachable!(),
    };
    if !valid {
        return Err(format!("variant {} is not defined for degree {degree}", variant.name()));
    }

    let stream = GroupStream::parse(&args.input, degree).map_err(lib_err)?;
    let mut machine = Machine::new(variant, degree, &stream).map_err(lib_err)?;

    let stdout = io::stdout();
    let mut out = stdout.lock();

    if args.trace {
        return Ok(trace_run(args, &mut machine, &mut out));
    }
    if args.json {
        let digits: Vec<u8> = (0..args.digits).map(|_| machine.next_digit()).collect();
        return Ok(print_json(args, variant, Some(&stream), &digits, stream.int_group_count(), &mut out));
    }

    // plain mode: stream digits as they are produced
    let g = stream.int_group_count();
    for i in 0..args.digits {
        let d = machine.next_digit();
        if i == g && write_flush(&mut out, b".").is_break() {
            return Ok(ExitCode::SUCCESS);
        }
        if write_flush(&mut out, &[b'0' + d]).is_break() {
            return Ok(ExitCode::SUCCESS);
        }
    }
    let _ = out.write_all(b"\n");
    Ok(ExitCode::SUCCESS)
}

fn run_float(args: &Args) -> Result<ExitCode, String> {
    if args.trace {
        return Err("--trace is not available in float mode".into());
    }
    if args.input.starts_with('-') {
        return Err(lib_err(Error::NegativeInput));
    }
    let m: f64 = args
        .input
        .parse()
        .map_err(|_| lib_err(Error::MalformedLiteral(args.input.clone())))?;
    let (mut machine, int_digits) = FloatMachine::new(args.degree, m).map_err(lib_err)?;

    let stdout = io::stdout();
    let mut out = stdout.lock();

    let mut digits = Vec::with_capacity(args.digits);
    while digits.len() < args.digits {
        match machine.next_digit() {
            Some(d) => digits.push(d),
            None => break,
        }
    }

    if args.json {
        print_json(args, Variant::Float, None, &digits, int_digits, &mut out);
    } else {
        for (i, &d) in digits.iter().enumerate() {
            if i == int_digits && write_flush(&mut out, b".").is_break() {
                return Ok(ExitCode::SUCCESS);
            }
            if write_flush(&mut out, &[b'0' + d]).is_break() {
                return Ok(ExitCode::SUCCESS);
            }
        }
        let _ = out.write_all(b"\n");
        let _ = out.flush();
    }

    if digits.len() < args.digits {
        eprintln!(
            "root: precision exhausted after {} digits ({} requested); \
             float mode cannot push further without losing digit accuracy",
            digits.len(),
            args.digits
        );
        return Ok(ExitCode::from(EXIT_PRECISION));
    }
    Ok(ExitCode::SUCCESS)
}

/// Write and flush, reporting `Break` when the reader went away.
fn write_flush(out: &mut impl Write, bytes: &[u8]) -> std::ops::ControlFlow<()> {
    let res = out.write_all(bytes).and_then(|_| out.flush());
    match res {
        Ok(()) => std::ops::ControlFlow::Continue(()),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => std::ops::ControlFlow::Break(()),
        Err(e) => {
            eprintln!("root: write error: {e}");
            std::ops::ControlFlow::Break(())
        }
    }
}

enum Machine {
    Pair(PairMachine),
    SubSqrt(SubtractiveSqrt),
    Quint(QuintMachine),
    SubCbrt(SubtractiveCbrt),
    Meta(MetaMachine),
}

impl Machine {
    fn new(variant: Variant, degree: u32, stream: &GroupStream) -> Result<Self, Error> {
        Ok(match variant {
            Variant::Pair => Machine::Pair(PairMachine::new(stream)?),
            Variant::Subtractive if degree == 2 => Machine::SubSqrt(SubtractiveSqrt::new(stream)?),
            Variant::Subtractive => Machine::SubCbrt(SubtractiveCbrt::new(stream)?),
            Variant::Quint => Machine::Quint(QuintMachine::new(stream)?),
            Variant::Meta => Machine::Meta(MetaMachine::new(degree, stream)?),
            Variant::Float => unreachable!("float mode handled separately"),
        })
    }

    fn step(&mut self) -> Step {
        match self {
            Machine::Pair(m) => m.step(),
            Machine::SubSqrt(m) => m.step(),
            Machine::Quint(m) => m.step(),
            Machine::SubCbrt(m) => m.step(),
            Machine::Meta(m) => m.step(),
        }
    }

    fn next_digit(&mut self) -> u8 {
        loop {
            if let Step::B { digit } = self.step() {
                return digit;
            }
        }
    }

    /// State fields for a trace line; the format is documented in the
    /// README and kept stable.
    fn state_fields(&self) -> String {
        match self {
            Machine::Pair(m) => {
                let s = m.state();
                format!("P={} Q={}", s.p, s.q)
            }
            Machine::Quint(m) => {
                let s = m.state();
                format!("M={} D={} R={} S={} W={}", s.m, s.d, s.r, s.s, s.w)
            }
            Machine::SubSqrt(m) => {
                let s = m.state();
                format!("rem={} k={} f={}", s.remainder, m.index(), s.odd_term)
            }
            Machine::SubCbrt(m) => {
                let s = m.state();
                format!("rem={} k={} f={}", s.remainder, s.k, m.subtrahend())
            }
            Machine::Meta(m) => {
                let s = m.state();
                format!("rem={} k={} f={}", s.remainder, s.k, s.diff_table[0])
            }
        }
    }
}

fn trace_run(args: &Args, machine: &mut Machine, out: &mut impl Write) -> ExitCode {
    if write_flush(out, format!("STEP 0 I {}\n", machine.state_fields()).as_bytes()).is_break() {
        return ExitCode::SUCCESS;
    }
    let mut emitted = 0;
    let mut i = 0usize;
    while emitted < args.digits {
        i += 1;
        let line = match machine.step() {
            Step::A => format!("STEP {i} A {}\n", machine.state_fields()),
            Step::B { digit } => {
                emitted += 1;
                format!("STEP {i} B {} digit={digit}\n", machine.state_fields())
            }
        };
        if write_flush(out, line.as_bytes()).is_break() {
            return ExitCode::SUCCESS;
        }
    }
    ExitCode::SUCCESS
}

fn print_json(
    args: &Args,
    variant: Variant,
    stream: Option<&GroupStream>,
    digits: &[u8],
    int_digits: usize,
    out: &mut impl Write,
) -> ExitCode {
    let digit_str: String = digits.iter().map(|d| (b'0' + d) as char).collect();
    let mut doc = serde_json::json!({
        "schema": 1,
        "degree": args.degree,
        "input": args.input,
        "variant": variant.name(),
        "digits": digit_str,
        "radix_string": rootspigot::place_radix(digits, int_digits),
    });
    if let Some(stream) = stream {
        doc["groups"] = serde_json::json!({
            "integer": stream.int_groups().iter().map(|g| g.to_decimal()).collect::<Vec<_>>(),
            "fraction": stream.frac_groups().iter().map(|g| g.to_decimal()).collect::<Vec<_>>(),
        });
    }
    let _ = writeln!(out, "{doc}");
    ExitCode::SUCCESS
}
