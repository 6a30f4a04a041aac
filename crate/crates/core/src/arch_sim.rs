//! Cycle-counting dataflow model of the column-sweep encoder.
//!
//! Four units process one column of the codeword array per initiation
//! interval:
//!
//! * Module A latches the info part x of the column and streams out
//!   b = M·(x, 0) one row at a time.
//! * Module C is the bank of q row encoders. Rows whose r̃ entry is already
//!   fixed by their row code emit it; the adder forms b̂ = v − b on them.
//! * Module D maps b̂ to b̃ = D(l)·b̂ and streams it out. The adder forms
//!   r̃_j = b̃ + b, and the entries that are still information for their row
//!   code are fed back into Module C.
//! * Module B takes b̃ serially, accumulates M⁻¹·b̃, and after its latency
//!   releases the codeword column (x, 0) + M⁻¹·b̃.
//!
//! Column j issues at cycle j·II and occupies A, D and B back to back, so
//! the whole array takes (q²−1)·II + (A + D + B latency) cycles.

use std::fmt;

use crate::encoder::HermitianCode;
use crate::error::{Error, Result};
use crate::gf::Elem;
use crate::hermitian::{CodeArray, CodeParams};
use crate::row_codes::RowEncoderState;
use crate::transforms::ColumnKind;

/// Constant C in the space bound: every resource count stays ≤ C·q² for the
/// m = q² family at q ∈ {2, 4, 8}.
pub const RESOURCE_CONSTANT: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SchedulePreset {
    /// One column per clock: every unit handles a full column per cycle.
    Parallel,
    /// Symbol-serial units with latency q and Module C at 1/q of the clock.
    Serial,
}

impl std::str::FromStr for SchedulePreset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" | "parallel" => Ok(SchedulePreset::Parallel),
            "serial" => Ok(SchedulePreset::Serial),
            other => Err(Error::InvalidSchedule(format!("unknown preset {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScheduleConfig {
    pub module_a_latency: usize,
    pub module_b_latency: usize,
    pub module_c_rate_divisor: usize,
    pub module_d_latency: usize,
    pub column_initiation_interval: usize,
}

impl ScheduleConfig {
    /// Latencies q, Module C at 1/q rate, a new column every q cycles.
    pub fn defaults(q: usize) -> Self {
        ScheduleConfig {
            module_a_latency: q,
            module_b_latency: q,
            module_c_rate_divisor: q,
            module_d_latency: q,
            column_initiation_interval: q,
        }
    }

    pub fn preset(preset: SchedulePreset, q: usize) -> Self {
        match preset {
            SchedulePreset::Parallel => ScheduleConfig {
                module_a_latency: 1,
                module_b_latency: 1,
                module_c_rate_divisor: 1,
                module_d_latency: 1,
                column_initiation_interval: 1,
            },
            SchedulePreset::Serial => Self::defaults(q),
        }
    }

    /// Pipeline depth of one column.
    pub fn column_latency(&self) -> usize {
        self.module_a_latency + self.module_d_latency + self.module_b_latency
    }

    /// Cycles beyond q²·II.
    pub fn fill(&self) -> usize {
        self.column_latency() - self.column_initiation_interval
    }

    /// Every unit must accept a new column each initiation interval, and the
    /// D latency must not exceed it so that the r̃ entries of one column reach
    /// Module C before the next column asks for parity.
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("module A latency", self.module_a_latency),
            ("module B latency", self.module_b_latency),
            ("module C rate divisor", self.module_c_rate_divisor),
            ("module D latency", self.module_d_latency),
            (
                "column initiation interval",
                self.column_initiation_interval,
            ),
        ];
        for (name, v) in fields {
            if v == 0 {
                return Err(Error::InvalidSchedule(format!("{name} must be positive")));
            }
        }
        let ii = self.column_initiation_interval;
        for (name, v) in &fields[..4] {
            if *v > ii {
                return Err(Error::InvalidSchedule(format!(
                    "{name} {v} exceeds the column initiation interval {ii}; \
                     the unit cannot accept one column per interval"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Unit {
    A,
    B,
    C(usize),
    D,
    SwitchA,
    SwitchB,
    Adder,
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unit::A => f.write_str("A"),
            Unit::B => f.write_str("B"),
            Unit::C(i) => write!(f, "C{i}"),
            Unit::D => f.write_str("D"),
            Unit::SwitchA => f.write_str("switch_a"),
            Unit::SwitchB => f.write_str("switch_b"),
            Unit::Adder => f.write_str("adder"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Action {
    /// A latches the info part of the column.
    Load,
    /// A emits (M·(x,0))_t.
    Emit(usize),
    /// A switch routes row t.
    Select(usize),
    /// C_t emits a parity symbol of its row code.
    Parity,
    /// C_t absorbs an information symbol of its row code.
    Absorb,
    /// adder: b̂_t = v_t − b_t.
    Subtract(usize),
    /// D emits b̃_t.
    Project(usize),
    /// B absorbs b̃_t.
    Accumulate(usize),
    /// adder: r̃_t = b̃_t + b_t.
    Combine(usize),
    /// B releases the finished codeword column.
    Release,
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Action::Load => f.write_str("load"),
            Action::Emit(t) => write!(f, "emit_{t}"),
            Action::Select(t) => write!(f, "select_{t}"),
            Action::Parity => f.write_str("parity"),
            Action::Absorb => f.write_str("absorb"),
            Action::Subtract(t) => write!(f, "subtract_{t}"),
            Action::Project(t) => write!(f, "project_{t}"),
            Action::Accumulate(t) => write!(f, "accumulate_{t}"),
            Action::Combine(t) => write!(f, "combine_{t}"),
            Action::Release => f.write_str("release"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraceEvent {
    pub cycle: u64,
    pub unit: Unit,
    pub action: Action,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimulationResult {
    pub codeword: CodeArray,
    pub rtilde: CodeArray,
    pub total_cycles: u64,
    pub trace: Vec<TraceEvent>,
}

/// Closed-form cycle count: (q²−1)·II + A + D + B latency.
pub fn cycle_formula(params: &CodeParams, cfg: &ScheduleConfig) -> u64 {
    let columns = params.q2() as u64;
    (columns - 1) * cfg.column_initiation_interval as u64 + cfg.column_latency() as u64
}

/// Per-column pipeline state.
struct Slot {
    column: usize,
    start: u64,
    kind: ColumnKind,
    known_right: usize,
    x: Vec<Elem>,
    b: Vec<Elem>,
    b_hat: Vec<Elem>,
    b_tilde: Vec<Elem>,
    right: Vec<Elem>,
    acc: Vec<Elem>,
}

fn serial_offset(t: usize, latency: usize, q: usize) -> usize {
    t * latency / q
}

pub fn simulate_encode(
    code: &HermitianCode,
    info: &[Elem],
    cfg: &ScheduleConfig,
) -> Result<SimulationResult> {
    cfg.validate()?;
    let p = code.params();
    let f = code.field();
    let fam = code.transforms();
    let (q, q2) = (p.q(), p.q2());
    let d = p.info_array(info)?;

    let ii = cfg.column_initiation_interval as u64;
    let (lat_a, lat_d, lat_b) = (
        cfg.module_a_latency,
        cfg.module_d_latency,
        cfg.module_b_latency,
    );
    let depth = cfg.column_latency() as u64;
    let total = cycle_formula(p, cfg);

    let mut bank: Vec<RowEncoderState<'_>> =
        code.row_codes().iter().map(|c| c.streaming(f)).collect();
    let mut slots: Vec<Slot> = (0..q2)
        .map(|j| {
            let info_rows = p.b_hat()[j];
            Slot {
                column: j,
                start: j as u64 * ii,
                kind: ColumnKind::for_column(j, q2),
                known_right: q - info_rows,
                x: (0..q)
                    .map(|i| {
                        if i < info_rows {
                            d.get(i, j)
                        } else {
                            Elem::ZERO
                        }
                    })
                    .collect(),
                b: vec![Elem::ZERO; q],
                b_hat: vec![Elem::ZERO; q],
                b_tilde: vec![Elem::ZERO; q],
                right: vec![Elem::ZERO; q],
                acc: vec![Elem::ZERO; q],
            }
        })
        .collect();

    let mut codeword = CodeArray::zeros(q);
    let mut rtilde = CodeArray::zeros(q);
    let mut trace = Vec::new();
    let hazard = |e: Error, column: usize| match e {
        Error::StreamOrder(why) => {
            Error::InvalidSchedule(format!("data hazard at column {column}: {why}"))
        }
        other => other,
    };

    for cycle in 0..total {
        // Older columns first, so a column's r̃ feedback reaches Module C
        // before a younger column in the same cycle asks it for parity.
        let first = (cycle.saturating_sub(depth - 1)).div_ceil(ii) as usize;
        let last = ((cycle / ii) as usize).min(q2 - 1);
        for slot in slots.iter_mut().take(last + 1).skip(first) {
            let off = (cycle - slot.start) as usize;
            let j = slot.column;
            let mut log = |unit, action| {
                trace.push(TraceEvent {
                    cycle,
                    unit,
                    action,
                    column: j,
                })
            };
            let m = fam.forward(slot.kind);
            let m_inv = fam.inverse(slot.kind);
            let l = slot.known_right;

            if off == 0 {
                log(Unit::A, Action::Load);
            }
            if off < lat_a {
                for t in (0..q).filter(|&t| serial_offset(t, lat_a, q) == off) {
                    slot.b[t] = m
                        .row(t)
                        .iter()
                        .zip(&slot.x)
                        .map(|(&a, &x)| f.mul(a, x))
                        .sum();
                    log(Unit::A, Action::Emit(t));
                    log(Unit::SwitchA, Action::Select(t));
                    if t < l {
                        let v = bank[t].pull().map_err(|e| hazard(e, j))?;
                        log(Unit::C(t), Action::Parity);
                        slot.b_hat[t] = v - slot.b[t];
                        log(Unit::Adder, Action::Subtract(t));
                    }
                }
            }
            if (lat_a..lat_a + lat_d).contains(&off) {
                if off == lat_a {
                    slot.b_tilde = fam.d(slot.kind, l).mul_vec(f, &slot.b_hat);
                }
                for t in (0..q).filter(|&t| lat_a + serial_offset(t, lat_d, q) == off) {
                    let bt = slot.b_tilde[t];
                    log(Unit::D, Action::Project(t));
                    log(Unit::SwitchB, Action::Select(t));
                    for (r, acc) in slot.acc.iter_mut().enumerate() {
                        *acc += f.mul(m_inv[(r, t)], bt);
                    }
                    log(Unit::B, Action::Accumulate(t));
                    slot.right[t] = bt + slot.b[t];
                    log(Unit::Adder, Action::Combine(t));
                    if t >= l {
                        bank[t].push(slot.right[t]).map_err(|e| hazard(e, j))?;
                        log(Unit::C(t), Action::Absorb);
                    }
                }
            }
            if off == lat_a + lat_d + lat_b - 1 {
                let left: Vec<Elem> = slot.x.iter().zip(&slot.acc).map(|(&x, &a)| x + a).collect();
                codeword.set_column(j, &left);
                rtilde.set_column(j, &slot.right);
                log(Unit::B, Action::Release);
            }
        }
    }

    let total_cycles = trace.last().map_or(0, |e| e.cycle + 1);
    Ok(SimulationResult {
        codeword,
        rtilde,
        total_cycles,
        trace,
    })
}

/// Trace as CSV with columns cycle, unit, action, column.
pub fn trace_csv(trace: &[TraceEvent]) -> String {
    let mut out = String::from("cycle,unit,action,column\n");
    for e in trace {
        out.push_str(&format!(
            "{},{},{},{}\n",
            e.cycle, e.unit, e.action, e.column
        ));
    }
    out
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ModuleResources {
    pub multipliers: usize,
    pub registers: usize,
    /// Stored coefficients (matrix entries, generator taps).
    pub rom_words: usize,
}

impl ModuleResources {
    pub fn memory(&self) -> usize {
        self.registers + self.rom_words
    }
}

impl std::ops::Add for ModuleResources {
    type Output = ModuleResources;
    fn add(self, o: ModuleResources) -> ModuleResources {
        ModuleResources {
            multipliers: self.multipliers + o.multipliers,
            registers: self.registers + o.registers,
            rom_words: self.rom_words + o.rom_words,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResourceReport {
    pub q: usize,
    pub module_a: ModuleResources,
    pub module_b: ModuleResources,
    pub module_c: ModuleResources,
    pub module_d: ModuleResources,
    /// Column staging between the units: delayed x, b and b̂.
    pub staging: ModuleResources,
    pub constant: usize,
}

impl ResourceReport {
    pub fn total(&self) -> ModuleResources {
        self.module_a + self.module_b + self.module_c + self.module_d + self.staging
    }

    pub fn bound(&self) -> usize {
        self.constant * self.q * self.q
    }

    pub fn within_bound(&self) -> bool {
        let t = self.total();
        t.multipliers <= self.bound() && t.memory() <= self.bound()
    }
}

impl fmt::Display for ResourceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<10} {:>11} {:>9} {:>9}",
            "unit", "multipliers", "registers", "rom"
        )?;
        let rows = [
            ("A", self.module_a),
            ("B", self.module_b),
            ("C", self.module_c),
            ("D", self.module_d),
            ("staging", self.staging),
            ("total", self.total()),
        ];
        for (name, r) in rows {
            writeln!(
                f,
                "{:<10} {:>11} {:>9} {:>9}",
                name, r.multipliers, r.registers, r.rom_words
            )?;
        }
        write!(
            f,
            "bound C*q^2 = {}*{} = {} ({})",
            self.constant,
            self.q * self.q,
            self.bound(),
            if self.within_bound() {
                "within"
            } else {
                "EXCEEDED"
            }
        )
    }
}

/// Multiplier and memory counts of the model.
///
/// A and B are q × q multiplier arrays with both coefficient sets (A and A′,
/// resp. their inverses) in ROM. Each row encoder C_i has â(i) feedback taps
/// plus one constant for the extended check, and â(i) + 1 registers. D is a
/// q-tap shift-register encoder whose tap set for each l is stored.
pub fn resource_report(code: &HermitianCode) -> ResourceReport {
    let p = code.params();
    let q = p.q();
    let square = ModuleResources {
        multipliers: q * q,
        registers: q,
        rom_words: 2 * q * q,
    };
    let module_c = code
        .row_codes()
        .iter()
        .map(|c| ModuleResources {
            multipliers: c.redundancy(),
            registers: c.redundancy(),
            rom_words: 0,
        })
        .fold(ModuleResources::default(), |a, b| a + b);
    let module_d = ModuleResources {
        multipliers: q,
        registers: q,
        rom_words: q * (q - 1) / 2,
    };
    let staging = ModuleResources {
        multipliers: 0,
        registers: 3 * q,
        rom_words: 0,
    };
    ResourceReport {
        q,
        module_a: square,
        module_b: square,
        module_c,
        module_d,
        staging,
        constant: RESOURCE_CONSTANT,
    }
}
