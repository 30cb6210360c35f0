//! Scenario documents: the JSON input to every command.
//!
//! A scenario names its command and carries a section of the same name.
//! Unknown fields are rejected. Any number may also be written as a string
//! multiple of pi such as `"pi/2"`, `"-3*pi/4"` or `"2pi"`.

use std::f64::consts::PI;
use std::fmt;
use std::path::{Path, PathBuf};

use serde::de::{self, Deserializer, Visitor};
use serde::Deserialize;

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

/// Default numeric tolerance for checks and classification.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Real(pub f64);

impl Real {
    pub fn get(self) -> f64 {
        self.0
    }
}

/// Parses a plain number or `[sign][coef][*]pi[/den]`.
pub fn parse_real(text: &str) -> Option<f64> {
    let t: String = text.trim().to_ascii_lowercase().chars().filter(|c| !c.is_whitespace()).collect();
    let Some(at) = t.find("pi") else {
        return t.parse().ok();
    };
    let (head, tail) = (&t[..at], &t[at + 2..]);
    let head = head.strip_suffix('*').unwrap_or(head);
    let coef = match head {
        "" | "+" => 1.0,
        "-" => -1.0,
        h => h.parse::<f64>().ok()?,
    };
    let den = match tail {
        "" => 1.0,
        d => d.strip_prefix('/')?.parse::<f64>().ok()?,
    };
    Some(coef * PI / den)
}

impl<'de> Deserialize<'de> for Real {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Real;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a number or a multiple of pi such as \"pi/2\"")
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Real, E> {
                Ok(Real(v))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Real, E> {
                Ok(Real(v as f64))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Real, E> {
                Ok(Real(v as f64))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Real, E> {
                parse_real(v).map(Real).ok_or_else(|| E::invalid_value(de::Unexpected::Str(v), &self))
            }
        }
        d.deserialize_any(V)
    }
}

/// Nested field paths travel inside error messages as `@path@message` so the
/// top-level diagnostic can name the innermost field.
fn nest(outer: &str, message: &str) -> String {
    let (inner, rest) = match message.strip_prefix('@').and_then(|m| m.split_once('@')) {
        Some((inner, rest)) => (inner, rest),
        None => ("", message),
    };
    let path = match (outer, inner) {
        (".", i) | ("", i) => i.to_owned(),
        (o, "") => o.to_owned(),
        (o, i) if i.starts_with('[') => format!("{o}{i}"),
        (o, i) => format!("{o}.{i}"),
    };
    format!("@{path}@{rest}")
}

/// Splits a nested marker off a message: `(path, message)`.
fn split_nested(message: &str) -> (Option<&str>, &str) {
    match message.strip_prefix('@').and_then(|m| m.split_once('@')) {
        Some((path, rest)) => (Some(path), rest),
        None => (None, message),
    }
}

fn take_kind<'de, D: Deserializer<'de>>(d: D) -> Result<(String, serde_json::Value), D::Error> {
    let mut map = serde_json::Map::deserialize(d)?;
    match map.remove("kind") {
        Some(serde_json::Value::String(kind)) => Ok((kind, serde_json::Value::Object(map))),
        Some(_) => Err(de::Error::custom(nest("kind", "must be a string"))),
        None => Err(de::Error::missing_field("kind")),
    }
}

fn from_body<T: de::DeserializeOwned, E: de::Error>(body: serde_json::Value) -> Result<T, E> {
    serde_path_to_error::deserialize(body).map_err(|e| E::custom(nest(&e.path().to_string(), &e.inner().to_string())))
}

/// `{"kind": "...", ...}` objects whose remaining fields form the variant.
macro_rules! tagged_enum {
    ($name:ident { $($tag:literal => $variant:ident($ty:ty)),+ $(,)? }) => {
        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let (kind, body) = take_kind(d)?;
                match kind.as_str() {
                    $($tag => from_body::<$ty, D::Error>(body).map($name::$variant),)+
                    other => Err(de::Error::custom(nest(
                        "kind",
                        &format!("unknown kind `{other}`, expected one of: {}", [$($tag),+].join(", ")),
                    ))),
                }
            }
        }
    };
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CommandKind {
    Simulate,
    Classify,
    SweepMap,
    TrotterSweep,
}

impl CommandKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CommandKind::Simulate => "simulate",
            CommandKind::Classify => "classify",
            CommandKind::SweepMap => "sweep-map",
            CommandKind::TrotterSweep => "trotter-sweep",
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub schema_version: u32,
    pub command: CommandKind,
    #[serde(default)]
    pub tolerance: Option<Real>,
    #[serde(default)]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub simulate: Option<SimulateSpec>,
    #[serde(default)]
    pub classify: Option<ClassifySpec>,
    #[serde(default, rename = "sweep-map")]
    pub sweep_map: Option<SweepMapSpec>,
    #[serde(default, rename = "trotter-sweep")]
    pub trotter_sweep: Option<TrotterSweepSpec>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SimulateMode {
    /// Closed path; the gate is compared with the predicted geometric gate.
    #[default]
    Loop,
    /// Any path; only Schmidt tracking is checked.
    Open,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimulateSpec {
    #[serde(default)]
    pub mode: SimulateMode,
    pub path: PathSpec,
    #[serde(default)]
    pub expect: Option<Expectations>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectations {
    #[serde(default)]
    pub solid_angle: Option<Real>,
    #[serde(default)]
    pub class: Option<ClassName>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
pub enum ClassName {
    #[serde(rename = "NOT_PE")]
    NotPe,
    #[serde(rename = "PE")]
    Pe,
    #[serde(rename = "SPE")]
    Spe,
}

impl From<ClassName> for schmidt_gates::EntanglerClass {
    fn from(c: ClassName) -> Self {
        match c {
            ClassName::NotPe => Self::NotPe,
            ClassName::Pe => Self::Pe,
            ClassName::Spe => Self::Spe,
        }
    }
}

#[derive(Debug, Clone)]
pub enum PathSpec {
    OrangeSlice(OrangeSliceSpec),
    LatitudeLoop(LatitudeLoopSpec),
    /// The latitude loop given as `samples + 1` time samples.
    SampledLatitude(SampledLatitudeSpec),
    Stationary(StationarySpec),
    Segments(SegmentsSpec),
}

tagged_enum!(PathSpec {
    "orange_slice" => OrangeSlice(OrangeSliceSpec),
    "latitude_loop" => LatitudeLoop(LatitudeLoopSpec),
    "sampled_latitude" => SampledLatitude(SampledLatitudeSpec),
    "stationary" => Stationary(StationarySpec),
    "segments" => Segments(SegmentsSpec),
});

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrangeSliceSpec {
    pub t1: Real,
    pub tau: Real,
}

/// `β` runs from `beta_start` to `beta_start + winding` at fixed `α`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatitudeLoopSpec {
    pub alpha: Real,
    pub beta_start: Real,
    pub winding: Real,
    pub duration: Real,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SampledLatitudeSpec {
    pub alpha: Real,
    pub beta_start: Real,
    pub winding: Real,
    pub duration: Real,
    pub samples: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StationarySpec {
    pub alpha: Real,
    pub beta: Real,
    pub duration: Real,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentsSpec {
    pub segments: Vec<SegmentSpec>,
}

#[derive(Debug, Clone)]
pub enum SegmentSpec {
    Latitude(LatitudeSpec),
    Meridian(MeridianSpec),
    Arc(ArcSpec),
    Sampled(SampledSpec),
}

tagged_enum!(SegmentSpec {
    "latitude" => Latitude(LatitudeSpec),
    "meridian" => Meridian(MeridianSpec),
    "arc" => Arc(ArcSpec),
    "sampled" => Sampled(SampledSpec),
});

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatitudeSpec {
    pub alpha: Real,
    pub beta_start: Real,
    pub beta_end: Real,
    pub duration: Real,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeridianSpec {
    pub beta: Real,
    pub alpha_start: Real,
    pub alpha_end: Real,
    pub duration: Real,
}

/// Great-circle arc from `(alpha, beta)` through the direction `towards`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcSpec {
    pub alpha: Real,
    pub beta: Real,
    pub towards: [Real; 3],
    pub angle: Real,
    pub duration: Real,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SampledSpec {
    pub duration: Real,
    pub alpha: Vec<Real>,
    pub beta: Vec<Real>,
}

impl SegmentSpec {
    fn duration(&self) -> Real {
        match self {
            SegmentSpec::Latitude(s) => s.duration,
            SegmentSpec::Meridian(s) => s.duration,
            SegmentSpec::Arc(s) => s.duration,
            SegmentSpec::Sampled(s) => s.duration,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifySpec {
    pub gate: GateSpec,
    #[serde(default)]
    pub expect_class: Option<ClassName>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SectorName {
    #[default]
    Gamma,
    Lambda,
}

/// Local Schmidt frame given by the Bloch angles of `|n⟩` and `|m⟩`.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameSpec {
    pub n_theta: Real,
    pub n_phi: Real,
    pub m_theta: Real,
    pub m_phi: Real,
}

#[derive(Debug, Clone)]
pub enum GateSpec {
    Schmidt(SchmidtGateSpec),
    UGeneral(UGeneralSpec),
    Matrix(MatrixSpec),
}

tagged_enum!(GateSpec {
    "schmidt" => Schmidt(SchmidtGateSpec),
    "u_general" => UGeneral(UGeneralSpec),
    "matrix" => Matrix(MatrixSpec),
});

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchmidtGateSpec {
    pub alpha0: Real,
    pub beta0: Real,
    pub omega: Real,
    #[serde(default)]
    pub sector: SectorName,
    #[serde(default)]
    pub frame: Option<FrameSpec>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UGeneralSpec {
    pub omega: Real,
}

/// Row-major entries as `[re, im]` pairs.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixSpec {
    pub rows: Vec<Vec<[Real; 2]>>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridRange {
    pub min: Real,
    pub max: Real,
    pub count: usize,
}

impl GridRange {
    pub fn new(min: f64, max: f64, count: usize) -> Self {
        Self { min: Real(min), max: Real(max), count }
    }

    /// `count` equally spaced points including both ends.
    pub fn points(&self) -> Vec<f64> {
        let (a, b) = (self.min.0, self.max.0);
        if self.count == 1 {
            return vec![a];
        }
        let last = (self.count - 1) as f64;
        (0..self.count).map(|i| if i + 1 == self.count { b } else { a + (b - a) * i as f64 / last }).collect()
    }

    fn validate(&self, field: &str) -> Result<(), CliError> {
        if self.count == 0 {
            return Err(CliError::invalid(format!("{field}.count"), "must be at least 1"));
        }
        if !(self.min.0.is_finite() && self.max.0.is_finite()) {
            return Err(CliError::invalid(field, "bounds must be finite"));
        }
        if self.min.0 > self.max.0 {
            return Err(CliError::invalid(field, "min must not exceed max"));
        }
        Ok(())
    }
}

fn default_alpha_grid() -> GridRange {
    GridRange::new(0.0, PI / 2.0, 200)
}

fn default_omega_grid() -> GridRange {
    GridRange::new(-PI, PI, 200)
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepMapSpec {
    #[serde(default = "default_alpha_grid")]
    pub alpha0: GridRange,
    #[serde(default = "default_omega_grid")]
    pub omega: GridRange,
}

impl Default for SweepMapSpec {
    fn default() -> Self {
        Self { alpha0: default_alpha_grid(), omega: default_omega_grid() }
    }
}

fn default_steps() -> Vec<usize> {
    (0..=8).map(|k| 1 << k).collect()
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrotterSweepSpec {
    pub theta: ThetaSpec,
    #[serde(default = "default_steps")]
    pub n: Vec<usize>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum ThetaSpec {
    List(Vec<Real>),
    Range(GridRange),
}

impl ThetaSpec {
    pub fn values(&self) -> Vec<f64> {
        match self {
            ThetaSpec::List(v) => v.iter().map(|r| r.0).collect(),
            ThetaSpec::Range(g) => g.points(),
        }
    }
}

fn positive(field: &str, x: Real) -> Result<(), CliError> {
    if x.0.is_finite() && x.0 > 0.0 {
        Ok(())
    } else {
        Err(CliError::invalid(field, format!("must be a positive finite number, got {}", x.0)))
    }
}

fn finite(field: &str, xs: &[Real]) -> Result<(), CliError> {
    match xs.iter().position(|x| !x.0.is_finite()) {
        None => Ok(()),
        Some(_) => Err(CliError::invalid(field, "must be finite")),
    }
}

impl Scenario {
    pub fn parse(text: &str, source: &Path) -> Result<Self, CliError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let scenario: Scenario = serde_path_to_error::deserialize(de).map_err(|e| {
            let outer = e.path().to_string();
            let inner = e.into_inner();
            let (line, column) = (inner.line(), inner.column());
            let text = inner.to_string();
            let text = text.strip_suffix(&format!(" at line {line} column {column}")).unwrap_or(&text);
            let (nested, message) = split_nested(text);
            let field = match nested {
                Some(n) => split_nested(&nest(&outer, &format!("@{n}@"))).0.unwrap_or_default().to_owned(),
                None => outer,
            };
            CliError::Parse { file: source.to_path_buf(), line, column, field, message: message.to_owned() }
        })?;
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
        Self::parse(&text, path)
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance.map_or(DEFAULT_TOLERANCE, Real::get)
    }

    /// Schema checks that serde alone cannot express.
    pub fn validate(&self) -> Result<(), CliError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(CliError::invalid(
                "schema_version",
                format!("unsupported version {}, expected {SCHEMA_VERSION}", self.schema_version),
            ));
        }
        if let Some(t) = self.tolerance {
            positive("tolerance", t)?;
        }
        let sections = [
            (CommandKind::Simulate, self.simulate.is_some()),
            (CommandKind::Classify, self.classify.is_some()),
            (CommandKind::SweepMap, self.sweep_map.is_some()),
            (CommandKind::TrotterSweep, self.trotter_sweep.is_some()),
        ];
        for (kind, present) in sections {
            if present && kind != self.command {
                return Err(CliError::invalid(
                    kind.as_str(),
                    format!("section does not belong to command {}", self.command.as_str()),
                ));
            }
        }
        match self.command {
            CommandKind::Simulate => {
                let spec = self.simulate.as_ref().ok_or_else(|| CliError::invalid("simulate", "section is required"))?;
                spec.path.validate("simulate.path")?;
                if let Some(Expectations { solid_angle: Some(s), .. }) = &spec.expect {
                    finite("simulate.expect.solid_angle", &[*s])?;
                }
            }
            CommandKind::Classify => {
                let spec = self.classify.as_ref().ok_or_else(|| CliError::invalid("classify", "section is required"))?;
                spec.gate.validate("classify.gate")?;
            }
            CommandKind::SweepMap => {
                if let Some(spec) = &self.sweep_map {
                    spec.alpha0.validate("sweep-map.alpha0")?;
                    spec.omega.validate("sweep-map.omega")?;
                }
            }
            CommandKind::TrotterSweep => {
                let spec = self
                    .trotter_sweep
                    .as_ref()
                    .ok_or_else(|| CliError::invalid("trotter-sweep", "section is required"))?;
                match &spec.theta {
                    ThetaSpec::List(v) if v.is_empty() => {
                        return Err(CliError::invalid("trotter-sweep.theta", "list must not be empty"))
                    }
                    ThetaSpec::List(v) => finite("trotter-sweep.theta", v)?,
                    ThetaSpec::Range(g) => g.validate("trotter-sweep.theta")?,
                }
                if spec.n.is_empty() {
                    return Err(CliError::invalid("trotter-sweep.n", "list must not be empty"));
                }
                if let Some(k) = spec.n.iter().position(|&n| n == 0) {
                    return Err(CliError::invalid(format!("trotter-sweep.n[{k}]"), "step count must be at least 1"));
                }
            }
        }
        Ok(())
    }
}

impl PathSpec {
    fn validate(&self, field: &str) -> Result<(), CliError> {
        match self {
            PathSpec::OrangeSlice(OrangeSliceSpec { t1, tau }) => {
                positive(&format!("{field}.t1"), *t1)?;
                positive(&format!("{field}.tau"), *tau)?;
                if t1.0 >= tau.0 {
                    return Err(CliError::invalid(format!("{field}.t1"), "must be smaller than tau"));
                }
            }
            PathSpec::LatitudeLoop(LatitudeLoopSpec { alpha, beta_start, winding, duration }) => {
                finite(field, &[*alpha, *beta_start, *winding])?;
                positive(&format!("{field}.duration"), *duration)?;
            }
            PathSpec::SampledLatitude(SampledLatitudeSpec { alpha, beta_start, winding, duration, samples }) => {
                finite(field, &[*alpha, *beta_start, *winding])?;
                positive(&format!("{field}.duration"), *duration)?;
                if *samples == 0 {
                    return Err(CliError::invalid(format!("{field}.samples"), "must be at least 1"));
                }
            }
            PathSpec::Stationary(StationarySpec { alpha, beta, duration }) => {
                finite(field, &[*alpha, *beta])?;
                positive(&format!("{field}.duration"), *duration)?;
            }
            PathSpec::Segments(SegmentsSpec { segments }) => {
                if segments.is_empty() {
                    return Err(CliError::invalid(format!("{field}.segments"), "must not be empty"));
                }
                for (k, seg) in segments.iter().enumerate() {
                    let f = format!("{field}.segments[{k}]");
                    positive(&format!("{f}.duration"), seg.duration())?;
                    if let SegmentSpec::Sampled(SampledSpec { alpha, beta, .. }) = seg {
                        if alpha.len() != beta.len() || alpha.len() < 2 {
                            return Err(CliError::invalid(
                                f,
                                "alpha and beta need the same length, at least 2",
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

impl GateSpec {
    fn validate(&self, field: &str) -> Result<(), CliError> {
        match self {
            GateSpec::Schmidt(SchmidtGateSpec { alpha0, beta0, omega, frame, .. }) => {
                finite(field, &[*alpha0, *beta0, *omega])?;
                if let Some(fr) = frame {
                    finite(&format!("{field}.frame"), &[fr.n_theta, fr.n_phi, fr.m_theta, fr.m_phi])?;
                }
            }
            GateSpec::UGeneral(UGeneralSpec { omega }) => finite(&format!("{field}.omega"), &[*omega])?,
            GateSpec::Matrix(MatrixSpec { rows }) => {
                if rows.len() != 4 || rows.iter().any(|r| r.len() != 4) {
                    return Err(CliError::invalid(format!("{field}.rows"), "must be 4 rows of 4 [re, im] pairs"));
                }
                for (r, row) in rows.iter().enumerate() {
                    for (k, z) in row.iter().enumerate() {
                        finite(&format!("{field}.rows[{r}][{k}]"), z)?;
                    }
                }
            }
        }
        Ok(())
    }
}
