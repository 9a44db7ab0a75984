//! One record per result. JSON lines carry `schema` and `kind`; text mirrors the same fields.

use std::io::{self, Write};

use akalg::algebra::TermRecord;
use akalg::report::{CheckRecord, Status, Witness};
use serde::Serialize;

use crate::args::Format;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: u32,
    kind: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

#[derive(Serialize)]
pub struct MethodValue {
    pub method: String,
    pub value: String,
}

#[derive(Serialize)]
pub struct SchurRecord {
    pub lambda: String,
    pub backend: String,
    /// `|Std(λ)|`.
    pub dim: usize,
    pub values: Vec<MethodValue>,
    pub agree: bool,
    pub status: Status,
}

#[derive(Serialize)]
pub struct CheckLine<'a> {
    pub suite: &'a str,
    #[serde(flatten)]
    pub record: &'a CheckRecord,
}

#[derive(Serialize)]
pub struct TableauRecord {
    pub lambda: String,
    pub index: usize,
    pub tableau: String,
    pub d: Vec<usize>,
    pub d_cycles: String,
    pub length: usize,
    pub residues: Vec<String>,
    pub gamma: String,
}

#[derive(Serialize)]
pub struct UnitRecord {
    pub lambda: String,
    pub backend: String,
    pub s: String,
    pub t: String,
    pub terms: Vec<TermRecord>,
}

#[derive(Serialize)]
pub struct Summary<'a> {
    pub command: &'a str,
    pub backend: String,
    pub total: usize,
    pub failed: usize,
    pub status: Status,
}

/// Buffered stdout. A closed reader (broken pipe) silently ends output.
pub struct Sink {
    format: Format,
    out: io::BufWriter<io::StdoutLock<'static>>,
    closed: bool,
}

/// `writeln!` into a `String` cannot fail.
macro_rules! line {
    ($s:expr, $($arg:tt)*) => {{
        use std::fmt::Write as _;
        let _ = writeln!($s, $($arg)*);
    }};
}

impl Sink {
    pub fn new(format: Format) -> Self {
        Sink { format, out: io::BufWriter::new(io::stdout().lock()), closed: false }
    }

    /// The reader went away; further records are dropped.
    pub fn closed(&self) -> bool {
        self.closed
    }

    fn emit(&mut self, text: &str) -> io::Result<()> {
        if self.closed {
            return Ok(());
        }
        match self.out.write_all(text.as_bytes()) {
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => {
                self.closed = true;
                Ok(())
            }
            r => r,
        }
    }

    fn json<T: Serialize>(&mut self, kind: &str, body: &T) -> io::Result<()> {
        let mut line = serde_json::to_string(&Envelope { schema: SCHEMA_VERSION, kind, body }).map_err(io::Error::other)?;
        line.push('\n');
        self.emit(&line)
    }

    pub fn schur(&mut self, rec: &SchurRecord) -> io::Result<()> {
        match self.format {
            Format::Json => self.json("schur", rec),
            Format::Text => {
                let mut s = String::new();
                line!(s, "{} {} |Std|={} [{}]", status(rec.status), rec.lambda, rec.dim, rec.backend);
                for v in &rec.values {
                    line!(s, "  {:<6} = {}", v.method, v.value);
                }
                self.emit(&s)
            }
        }
    }

    pub fn check(&mut self, suite: &str, rec: &CheckRecord) -> io::Result<()> {
        match self.format {
            Format::Json => self.json("check", &CheckLine { suite, record: rec }),
            Format::Text => {
                let lam = rec.lambda.as_deref().map(|l| format!(" {l}")).unwrap_or_default();
                let mut s = String::new();
                line!(s, "{} {}{}", status(rec.status), rec.check, lam);
                if let Some(w) = &rec.witness {
                    line!(s, "  witness: {}", witness_text(w));
                }
                self.emit(&s)
            }
        }
    }

    pub fn tableau(&mut self, rec: &TableauRecord) -> io::Result<()> {
        match self.format {
            Format::Json => self.json("tableau", rec),
            Format::Text => {
                let mut s = String::new();
                line!(
                    s,
                    "{:>4} {}  d={} ℓ={}  res=[{}]  γ={}",
                    rec.index,
                    rec.tableau,
                    rec.d_cycles,
                    rec.length,
                    rec.residues.join(", "),
                    rec.gamma
                );
                self.emit(&s)
            }
        }
    }

    /// A named value: `{"kind": kind, "name": key, "value": value}`.
    pub fn note(&mut self, kind: &str, key: &str, value: &str) -> io::Result<()> {
        match self.format {
            Format::Json => {
                let body: std::collections::BTreeMap<&str, &str> = [("name", key), ("value", value)].into_iter().collect();
                self.json(kind, &body)
            }
            Format::Text => self.emit(&format!("{key}: {value}\n")),
        }
    }

    pub fn unit(&mut self, rec: &UnitRecord) -> io::Result<()> {
        match self.format {
            Format::Json => self.json("matrix_unit", rec),
            Format::Text => {
                let terms: Vec<String> = rec
                    .terms
                    .iter()
                    .map(|t| format!("({})*L^{:?}T{:?}", t.coeff, t.c, t.w))
                    .collect();
                let body = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
                self.emit(&format!("f~[{} , {}] = {}\n", rec.s, rec.t, body))
            }
        }
    }

    pub fn summary(&mut self, s: &Summary) -> io::Result<()> {
        match self.format {
            Format::Json => self.json("summary", s),
            Format::Text => self.emit(&format!(
                "{} {}: {} records, {} failed [{}]\n",
                status(s.status),
                s.command,
                s.total,
                s.failed,
                s.backend
            )),
        }
    }

    pub fn flush(&mut self) -> io::Result<()> {
        match self.out.flush() {
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
            r => r,
        }
    }
}

fn status(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
    }
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::Text(t) => t.clone(),
        Witness::Values(v) => v.iter().map(|(k, x)| format!("{k}={x}")).collect::<Vec<_>>().join("; "),
        Witness::Element(terms) => terms
            .iter()
            .map(|t| format!("({})*L^{:?}T{:?}", t.coeff, t.c, t.w))
            .collect::<Vec<_>>()
            .join(" + "),
    }
}
