use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hermit_core::arch_sim::{
    cycle_formula, resource_report, simulate_encode, trace_csv, ScheduleConfig, SchedulePreset,
};
use hermit_core::io::{format_elem, parse_info, ArrayFile};
use hermit_core::transforms::{corner_report, TransformFamily};
use hermit_core::{
    make_code, make_code_in_range, oracle, CodeArray, CodeParams, Elem, Error, FieldSpec,
    HermitianCode, SyndromeTable,
};

#[derive(Parser, Debug)]
#[command(
    name = "hermit",
    version,
    about = "Systematic Hermitian code encoder over GF(q^2)"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug, Clone)]
struct CodeArgs {
    /// Field exponent: q = 2^s, symbols in GF(2^(2s)).
    #[arg(long)]
    s: u32,
    /// Designed pole order bound.
    #[arg(long)]
    m: usize,
    /// Accept every m in [q^2-1, q^3-q-1], without the k < q^3-g-q restriction.
    #[arg(long)]
    boundary: bool,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Print the field constants.
    FieldInfo {
        #[arg(long)]
        s: u32,
    },
    /// Print code parameters and the info-position staircase.
    CodeInfo {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Encode an info vector into a codeword array.
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        /// Info file (hex stream or JSON); `-` reads stdin.
        #[arg(long)]
        info: String,
        /// Write the array here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also print the transformed array r~ to stderr.
        #[arg(long)]
        dump_rtilde: bool,
    },
    /// Verify that an array is a codeword.
    Check {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        array: PathBuf,
    },
    /// Print the syndrome table of an array.
    Syndrome {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        array: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Run the cycle-counting architecture model.
    Simulate {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        info: String,
        #[arg(long, value_enum, default_value_t = Preset::Parallel)]
        preset: Preset,
        /// Write the event trace as CSV.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Randomized encoder-vs-oracle campaigns plus structural checks.
    Selftest {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, env = "HERMIT_SEED", default_value_t = 0)]
        seed: u64,
        /// Random info vectors per campaign.
        #[arg(long, default_value_t = 50)]
        trials: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Direct,
    Fast,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Preset {
    /// q-wide units, one column per cycle.
    #[value(name = "paper", alias = "parallel")]
    Parallel,
    /// Symbol-serial units, q cycles per column.
    Serial,
}

impl From<Preset> for SchedulePreset {
    fn from(p: Preset) -> Self {
        match p {
            Preset::Parallel => SchedulePreset::Parallel,
            Preset::Serial => SchedulePreset::Serial,
        }
    }
}

/// Distinguishes a failed check (exit 2) from a usage or input error (exit 1).
enum Outcome {
    Pass,
    Fail,
}

type CliResult = Result<Outcome, Error>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.verb) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(verb: Verb) -> CliResult {
    match verb {
        Verb::FieldInfo { s } => field_info(s),
        Verb::CodeInfo { code } => code_info(&code),
        Verb::Encode {
            code,
            info,
            out,
            dump_rtilde,
        } => encode(&code, &info, out.as_deref(), dump_rtilde),
        Verb::Check { code, array } => check(&code, &array),
        Verb::Syndrome {
            code,
            array,
            method,
        } => syndrome(&code, &array, method),
        Verb::Simulate {
            code,
            info,
            preset,
            trace,
        } => simulate(&code, &info, preset, trace.as_deref()),
        Verb::Selftest { code, seed, trials } => selftest(&code, seed, trials),
    }
}

fn params(args: &CodeArgs) -> Result<CodeParams, Error> {
    let field = FieldSpec::build(args.s)?;
    if args.boundary {
        make_code_in_range(field, args.m)
    } else {
        make_code(field, args.m).map_err(|e| match e {
            Error::InvalidParameter(msg) if msg.contains("dimension") => {
                Error::InvalidParameter(format!("{msg}; pass --boundary to allow it"))
            }
            other => other,
        })
    }
}

fn read_text(path: &str) -> Result<String, Error> {
    let mut text = String::new();
    if path == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::Format(format!("stdin: {e}")))?;
    } else {
        text = fs::read_to_string(path).map_err(|e| Error::Format(format!("{path}: {e}")))?;
    }
    Ok(text)
}

fn write_text(path: &Path, text: &str) -> Result<(), Error> {
    fs::write(path, text).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

fn read_array(p: &CodeParams, path: &Path) -> Result<CodeArray, Error> {
    let text = read_text(&path.to_string_lossy())?;
    let file = ArrayFile::parse(&text)?;
    if p.m() != Some(file.m) {
        return Err(Error::Format(format!(
            "array was written for m={}, expected m={}",
            file.m,
            p.m().unwrap_or(0)
        )));
    }
    file.to_array(p.field())
}

fn field_info(s: u32) -> CliResult {
    let f = FieldSpec::build(s)?;
    let hex = |e| format_elem(&f, e);
    println!("s        {}", f.s());
    println!("q        {}", f.q());
    println!("q^2      {}", f.q2());
    println!("modulus  {:#x} ({:b})", f.modulus(), f.modulus());
    println!("epsilon  {}", hex(f.epsilon()));
    println!("gamma    {}", hex(f.gamma()));
    println!("y0       {}", hex(f.y0()));
    Ok(Outcome::Pass)
}

fn code_info(args: &CodeArgs) -> CliResult {
    let p = params(args)?;
    println!("q        {}", p.q());
    println!("m        {}", args.m);
    println!("n        {}", p.n());
    println!("k        {}", p.k());
    println!("genus    {}", p.genus());
    println!("a_hat    {:?}", p.a_hat());
    println!("info_len {:?}", p.info_len());
    println!("b_hat    {:?}", p.b_hat());
    println!("info positions (# = info, . = parity):");
    print!("{}", p.staircase());
    Ok(Outcome::Pass)
}

fn encode(args: &CodeArgs, info_path: &str, out: Option<&Path>, dump_rtilde: bool) -> CliResult {
    let p = params(args)?;
    let info = parse_info(&p, &read_text(info_path)?)?;
    let code = HermitianCode::new(p)?;
    let enc = code.encode(&info)?;
    let f = code.field();
    let json = ArrayFile::from_array(f, args.m, &enc.codeword).to_json();
    match out {
        Some(path) => write_text(path, &json)?,
        None => println!("{json}"),
    }
    if dump_rtilde {
        eprintln!(
            "{}",
            ArrayFile::from_array(f, args.m, &enc.rtilde).to_json()
        );
    }
    Ok(Outcome::Pass)
}

fn print_nonzero(f: &FieldSpec, table: &SyndromeTable) {
    for &((a, b), v) in table.nonzero() {
        println!("  S({a},{b}) = {}", format_elem(f, v));
    }
}

fn check(args: &CodeArgs, path: &Path) -> CliResult {
    let p = params(args)?;
    let r = read_array(&p, path)?;
    let code = HermitianCode::new(p)?;
    let table = code.syndromes_fast(&r)?;
    if table.is_zero() {
        println!("PASS");
        Ok(Outcome::Pass)
    } else {
        println!("FAIL: {} nonzero syndromes", table.nonzero().count());
        print_nonzero(code.field(), &table);
        Ok(Outcome::Fail)
    }
}

fn print_table(f: &FieldSpec, label: &str, table: &SyndromeTable) {
    println!("{label}:");
    for &((a, b), v) in table.entries() {
        println!("  S({a},{b}) = {}", format_elem(f, v));
    }
}

fn syndrome(args: &CodeArgs, path: &Path, method: Method) -> CliResult {
    let p = params(args)?;
    let r = read_array(&p, path)?;
    let code = HermitianCode::new(p)?;
    let f = code.field();
    let direct = matches!(method, Method::Direct | Method::Both)
        .then(|| code.syndromes_direct(&r))
        .transpose()?;
    let fast = matches!(method, Method::Fast | Method::Both)
        .then(|| code.syndromes_fast(&r))
        .transpose()?;
    if let Some(t) = &direct {
        print_table(f, "direct", t);
    }
    if let Some(t) = &fast {
        print_table(f, "fast", t);
    }
    if let (Some(a), Some(b)) = (&direct, &fast) {
        if a != b {
            println!("MISMATCH between direct and fast syndromes");
            return Ok(Outcome::Fail);
        }
        println!("direct and fast tables agree");
    }
    Ok(Outcome::Pass)
}

fn simulate(args: &CodeArgs, info_path: &str, preset: Preset, trace: Option<&Path>) -> CliResult {
    let p = params(args)?;
    let info = parse_info(&p, &read_text(info_path)?)?;
    let code = HermitianCode::new(p)?;
    let q = code.params().q();
    let cfg = ScheduleConfig::preset(preset.into(), q);
    let sim = simulate_encode(&code, &info, &cfg)?;
    let reference = code.encode(&info)?;
    let formula = cycle_formula(code.params(), &cfg);

    let name = match preset {
        Preset::Parallel => "paper (q-wide lanes)",
        Preset::Serial => "serial",
    };
    println!("preset            {name}");
    println!(
        "latencies         A={} D={} B={}, C rate 1/{}, II={}",
        cfg.module_a_latency,
        cfg.module_d_latency,
        cfg.module_b_latency,
        cfg.module_c_rate_divisor,
        cfg.column_initiation_interval
    );
    println!("total cycles      {}", sim.total_cycles);
    println!(
        "formula           (q^2-1)*II + A+D+B = {formula} = q^2*II + fill, fill = {}",
        cfg.fill()
    );
    println!(
        "note              one column per clock needs q-wide A/B/D lanes and full-rate C; \
         with symbol-serial units and C at 1/q rate the sweep takes q^3 + fill cycles"
    );
    println!("{}", resource_report(&code));
    if let Some(path) = trace {
        write_text(path, &trace_csv(&sim.trace))?;
    }
    let ok = sim.codeword == reference.codeword && sim.total_cycles == formula;
    println!("{}", if ok { "PASS" } else { "FAIL" });
    Ok(if ok { Outcome::Pass } else { Outcome::Fail })
}

fn report(name: &str, ok: bool, all: &mut bool) {
    println!("{} {name}", if ok { "PASS" } else { "FAIL" });
    *all &= ok;
}

fn selftest(args: &CodeArgs, seed: u64, trials: usize) -> CliResult {
    let p = params(args)?;
    let f = p.field().clone();
    let q = f.q();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut all = true;
    println!("selftest q={q} m={} seed={seed} trials={trials}", args.m);

    // TransformFamily::new already checks both inverses and the D projections.
    let family_ok = TransformFamily::new(&f).is_ok();
    report(
        "column transform inverses and projections",
        family_ok,
        &mut all,
    );
    let corners_ok = (1..=q).all(|l| corner_report(&f, l).all());
    report(
        "corner submatrices nonsingular for l = 1..q",
        corners_ok,
        &mut all,
    );

    let code = HermitianCode::new(p)?;
    let p = code.params();
    let gated = oracle::verify_information_set(p)?;
    report("information set nonsingular", gated, &mut all);

    let random_elem = |rng: &mut ChaCha8Rng| Elem(rng.gen_range(0..f.q2()) as u16);
    let (mut sys, mut orc, mut syn, mut sim_ok) = (true, true, true, true);
    let cfg = ScheduleConfig::preset(SchedulePreset::Parallel, q);
    for _ in 0..trials {
        let info: Vec<Elem> = (0..p.k()).map(|_| random_elem(&mut rng)).collect();
        let enc = code.encode(&info)?;
        sys &= code.is_codeword(&enc.codeword)?
            && p.read_info(&enc.codeword) == info
            && code.rows_in_row_codes(&enc.rtilde)?;
        if gated {
            orc &= oracle::complete_systematic(p, &info)? == enc.codeword;
        }
        let noise = CodeArray::from_flat(q, (0..p.n()).map(|_| random_elem(&mut rng)).collect())?;
        syn &= code.syndromes_direct(&noise)? == code.syndromes_fast(&noise)?;
        sim_ok &= simulate_encode(&code, &info, &cfg)?.codeword == enc.codeword;
    }
    report("encoder output is a systematic codeword", sys, &mut all);
    report(
        "encoder matches dense oracle completion",
        orc && gated,
        &mut all,
    );
    report("direct and fast syndromes agree", syn, &mut all);
    report("architecture model matches encoder", sim_ok, &mut all);

    println!("{}", if all { "PASS" } else { "FAIL" });
    Ok(if all { Outcome::Pass } else { Outcome::Fail })
}
