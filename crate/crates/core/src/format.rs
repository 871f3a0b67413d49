//! Plain-text instance files and the bench CSV.
//!
//! ```text
//! # promise-hull v1 family=adversarial n=5 seed=0 pi_seed=3 j=1
//! 4 32
//! ...
//! # truth
//! 1 4 2 3
//! ```
//!
//! `n` is the number of point lines. Blank lines are ignored.

use std::fmt::Write as _;
use std::io::{self, Write};

use thiserror::Error;

use crate::error::HullError;
use crate::geometry::{Point, PointSeq};
use crate::instances::{Family, Instance, InstanceParams};

const MAGIC: &str = "# promise-hull v1";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Hull(#[from] HullError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl FormatError {
    fn at(line: usize, msg: impl Into<String>) -> Self {
        FormatError::Parse { line, msg: msg.into() }
    }

    /// Line number of a parse error.
    pub fn line(&self) -> Option<usize> {
        match self {
            FormatError::Parse { line, .. } => Some(*line),
            _ => None,
        }
    }
}

/// Parsed contents of an instance file. Points are not yet validated for
/// general position; see [`InstanceFile::working_seq`].
#[derive(Debug, Clone, PartialEq)]
pub struct InstanceFile {
    pub family: Family,
    pub seed: u64,
    pub pi_seed: Option<u64>,
    pub j: Option<usize>,
    pub fraction: Option<f64>,
    pub points: Vec<Point>,
    pub truth: Option<Vec<usize>>,
}

impl InstanceFile {
    pub fn from_instance(inst: &Instance) -> Self {
        InstanceFile {
            family: inst.family,
            seed: inst.seed,
            pi_seed: inst.params.pi_seed,
            j: inst.params.j,
            fraction: inst.params.fraction,
            points: inst.seq.raw_points(),
            truth: inst.truth.clone(),
        }
    }

    /// The sequence algorithms run on: general position is enforced, except
    /// for supersequences, which are deduplicated by coordinates first.
    pub fn working_seq(&self) -> crate::Result<PointSeq> {
        match self.family {
            Family::Supersequence => PointSeq::dedup_by_coordinates(self.points.clone()),
            _ => PointSeq::new(self.points.clone()),
        }
    }

    pub fn into_instance(self) -> crate::Result<Instance> {
        let seq = match self.family {
            Family::Supersequence => PointSeq::from_points_unchecked(self.points)?,
            _ => PointSeq::new(self.points)?,
        };
        let params = InstanceParams { n: seq.len(), pi_seed: self.pi_seed, j: self.j, fraction: self.fraction };
        Ok(Instance { seq, family: self.family, seed: self.seed, truth: self.truth, params })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{MAGIC} family={} n={} seed={}", self.family.name(), self.points.len(), self.seed);
        if let Some(p) = self.pi_seed {
            write!(s, " pi_seed={p}").unwrap();
        }
        if let Some(j) = self.j {
            write!(s, " j={j}").unwrap();
        }
        if let Some(f) = self.fraction {
            write!(s, " fraction={f}").unwrap();
        }
        s.push('\n');
        for p in &self.points {
            writeln!(s, "{} {}", p.x, p.y).unwrap();
        }
        if let Some(t) = &self.truth {
            s.push_str("# truth\n");
            s.push_str(&format_indices(t));
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
        let (hl, header) = lines.next().ok_or_else(|| FormatError::at(1, "missing header"))?;
        let rest =
            header.strip_prefix(MAGIC).ok_or_else(|| FormatError::at(hl, "expected '# promise-hull v1' header"))?;

        let (mut family, mut n, mut seed, mut pi_seed, mut j, mut fraction) = (None, None, None, None, None, None);
        for kv in rest.split_whitespace() {
            let (k, v) = kv.split_once('=').ok_or_else(|| FormatError::at(hl, format!("malformed field '{kv}'")))?;
            let bad = || FormatError::at(hl, format!("bad value for {k}: '{v}'"));
            match k {
                "family" => family = Some(Family::from_name(v).ok_or_else(bad)?),
                "n" => n = Some(v.parse::<usize>().map_err(|_| bad())?),
                "seed" => seed = Some(v.parse::<u64>().map_err(|_| bad())?),
                "pi_seed" => pi_seed = Some(v.parse::<u64>().map_err(|_| bad())?),
                "j" => j = Some(v.parse::<usize>().map_err(|_| bad())?),
                "fraction" => fraction = Some(v.parse::<f64>().map_err(|_| bad())?),
                _ => return Err(FormatError::at(hl, format!("unknown field '{k}'"))),
            }
        }
        let family = family.ok_or_else(|| FormatError::at(hl, "header lacks family="))?;
        let n = n.ok_or_else(|| FormatError::at(hl, "header lacks n="))?;
        let seed = seed.ok_or_else(|| FormatError::at(hl, "header lacks seed="))?;

        let mut points: Vec<Point> = Vec::with_capacity(n.min(1 << 24));
        let mut truth = None;
        let mut last = hl;
        while let Some((ln, line)) = lines.next() {
            last = ln;
            if line == "# truth" {
                let (tl, body) = lines.next().unwrap_or((ln + 1, ""));
                let mut t = Vec::new();
                for tok in body.split_whitespace() {
                    let i: usize = tok.parse().map_err(|_| FormatError::at(tl, format!("bad index '{tok}'")))?;
                    if i == 0 || i > points.len() {
                        return Err(FormatError::at(tl, format!("index {i} out of range")));
                    }
                    t.push(i);
                }
                let xs: Vec<i64> = t.iter().map(|&i| points[i - 1].x).collect();
                if xs.windows(2).any(|w: &[i64]| w[0] >= w[1]) {
                    return Err(FormatError::at(tl, "truth indices are not x-sorted"));
                }
                if let Some((extra, _)) = lines.next() {
                    return Err(FormatError::at(extra, "trailing content after truth"));
                }
                truth = Some(t);
                break;
            }
            let mut it = line.split_whitespace();
            let mut coord = || -> Result<i64, FormatError> {
                let tok = it.next().ok_or_else(|| FormatError::at(ln, "expected two integers"))?;
                tok.parse().map_err(|_| FormatError::at(ln, format!("bad coordinate '{tok}'")))
            };
            let (x, y) = (coord()?, coord()?);
            if it.next().is_some() {
                return Err(FormatError::at(ln, "expected two integers"));
            }
            let p = Point::new(x, y);
            if !p.in_range() {
                return Err(FormatError::at(ln, "coordinate outside the supported range"));
            }
            points.push(p);
        }
        if points.len() != n {
            return Err(FormatError::at(last, format!("header says n={n} but found {} points", points.len())));
        }
        Ok(InstanceFile { family, seed, pi_seed, j, fraction, points, truth })
    }
}

/// Space-separated indices, as in the truth section and `hull` output.
pub fn format_indices(v: &[usize]) -> String {
    v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
}

pub const CSV_HEADER: &str = "family,algo,n,seed,wall_ns,coord_cmps,orientation_tests,hull_size";

/// One benchmark measurement; counters cover exactly one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub family: String,
    pub algo: String,
    pub n: usize,
    pub seed: u64,
    pub wall_ns: u128,
    pub coord_cmps: u64,
    pub orientation_tests: u64,
    pub hull_size: usize,
}

impl BenchRow {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.family,
            self.algo,
            self.n,
            self.seed,
            self.wall_ns,
            self.coord_cmps,
            self.orientation_tests,
            self.hull_size
        )
    }
}

pub fn write_csv<W: Write>(mut w: W, rows: &[BenchRow]) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(w, "{}", r.csv_line())?;
    }
    Ok(())
}
