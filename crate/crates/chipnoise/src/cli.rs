//! Command-line frontend: argument parsing, config resolution and command
//! dispatch. Exit codes: 0 success, 2 usage error, 3 domain/physics error,
//! 4 I/O error.

use std::fs::File;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use chipnoise_core::heating::{self, HeatingConfig};
use chipnoise_core::lifetime::{lifetime_curve, LifetimeCurveParams, LifetimeModel};
use chipnoise_core::materials::{AlloySpec, Conductor, MaterialDb, OperatingPoint};
use chipnoise_core::noise::{
    material_noise_norm, spectral_density, spin_flip_rate, BiasField, TrapSpec,
};
use chipnoise_core::geometry::{interp_factor, skin_depth, y_slab, TrapPoint};
use chipnoise_core::screening::{boundary_concentration, crossover_distance, screen_metals};

use crate::db;
use crate::figures::{write_figure, FigureId};
use crate::output::{Format, Table};
use crate::units::{
    parse_bias_field, parse_value_or_range, parse_wire, parse_wire_material, AlloyArg, Spacing,
    ValueOrRange, WireMaterial,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Io(_) => 4,
        }
    }

    pub fn from_core(e: chipnoise_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<crate::units::ParseError> for CliError {
    fn from(e: crate::units::ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<db::DbError> for CliError {
    fn from(e: db::DbError) -> Self {
        match e {
            db::DbError::Io(err) => CliError::Io(err.to_string()),
            other => CliError::Domain(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "chipnoise",
    version,
    about = "Thermal magnetic noise, trap lifetimes and ohmic heating near atom-chip wires",
    after_help = "Values accept inline units: bias fields `0.57G` or `0.79MHz`, wire \
                  cross-sections `10x2.15` (um), ranges `LO:HI[:COUNT]`. The material \
                  database can be overridden with --db or the CHIPNOISE_DB environment \
                  variable."
)]
pub struct Cli {
    /// Material database JSON (default: CHIPNOISE_DB, then the bundled set).
    #[arg(long, global = true)]
    pub db: Option<PathBuf>,

    /// JSON config file supplying defaults (db path, heating constants).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,

    /// Write the table to a file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Resistivity of a metal or dilute alloy over a temperature (range).
    Resistivity(ResistivityArgs),
    /// Geometry tensor, noise spectral density and spin-flip rate above a wire.
    Noise(NoiseArgs),
    /// Trap lifetime versus height above a rectangular wire.
    Lifetime(LifetimeArgs),
    /// Ohmic temperature rise of a current-carrying wire.
    Heating(HeatingArgs),
    /// Screen all database metals against the room-temperature gold standard.
    Screen(ScreenArgs),
    /// Boundary concentration pinning an alloy to a resistivity target.
    Boundary(BoundaryArgs),
    /// Distance where the skin-depth-corrected noise of two wires crosses.
    Crossover(CrossoverArgs),
    /// Reproduce a bundled figure: one CSV per curve plus a gnuplot script.
    Figure(FigureArgs),
}

#[derive(Debug, Args)]
pub struct ResistivityArgs {
    /// Pure metal name from the database.
    #[arg(long, conflicts_with = "alloy")]
    pub metal: Option<String>,
    /// Dilute alloy as SOLVENT:SOLUTE:X, e.g. Ag:Au:5.
    #[arg(long)]
    pub alloy: Option<String>,
    /// Temperature in K, single value or LO:HI or LO:HI:COUNT.
    #[arg(long = "T")]
    pub temperature: String,
    /// Residual-resistance ratio override for pure metals.
    #[arg(long)]
    pub rrr: Option<f64>,
}

#[derive(Debug, Args)]
pub struct NoiseArgs {
    #[arg(long, conflicts_with = "alloy")]
    pub metal: Option<String>,
    #[arg(long)]
    pub alloy: Option<String>,
    /// Resistivity override in µΩ·cm (skips the material model).
    #[arg(long)]
    pub rho: Option<f64>,
    /// Wire temperature in K.
    #[arg(long = "T")]
    pub temperature: f64,
    /// Wire cross-section WIDTHxTHICKNESS in µm.
    #[arg(long)]
    pub wire: String,
    /// Trap heights above the wire in µm: single value or LO:HI or LO:HI:COUNT.
    #[arg(long)]
    pub heights: String,
    /// Lateral trap offset in µm.
    #[arg(long, default_value_t = 0.0)]
    pub x: f64,
    /// Bias field (`0.57G`) or Larmor frequency (`0.79MHz`).
    #[arg(long, default_value = "0.57G")]
    pub field: String,
    /// Hyperfine state: total spin F.
    #[arg(long, default_value_t = 2.0)]
    pub f_total: f64,
    /// Hyperfine state: magnetic quantum number m.
    #[arg(long, default_value_t = 2.0)]
    pub m: f64,
    /// Landé factor g_F.
    #[arg(long, default_value_t = 0.5)]
    pub g_f: f64,
    /// Multiply the quasi-static noise by the skin-depth interpolation factor.
    #[arg(long)]
    pub skin_correction: bool,
    #[arg(long)]
    pub rrr: Option<f64>,
}

#[derive(Debug, Args)]
pub struct LifetimeArgs {
    #[arg(long, conflicts_with = "alloy")]
    pub metal: Option<String>,
    #[arg(long)]
    pub alloy: Option<String>,
    /// Resistivity override in µΩ·cm (skips the material model).
    #[arg(long)]
    pub rho: Option<f64>,
    /// Wire temperature in K.
    #[arg(long = "T")]
    pub temperature: f64,
    /// Wire cross-section WIDTHxTHICKNESS in µm.
    #[arg(long, default_value = "10x2.15")]
    pub wire: String,
    /// Bias field (`0.57G`) or Larmor frequency (`0.79MHz`).
    #[arg(long, default_value = "0.57G")]
    pub field: String,
    /// Trap heights in µm: single value or LO:HI or LO:HI:COUNT, log-spaced.
    #[arg(long, default_value = "1:100")]
    pub heights: String,
    /// Technical lifetime ceiling in s (`inf` to disable).
    #[arg(long, default_value_t = 2.5)]
    pub tau_tech: f64,
    /// Cascade reduction: the full bidirectional solution or the one-way sum.
    #[arg(long, value_enum, default_value_t = ModelArg::Complete)]
    pub model: ModelArg,
    #[arg(long)]
    pub skin_correction: bool,
    #[arg(long, default_value_t = 2.0)]
    pub f_total: f64,
    #[arg(long, default_value_t = 2.0)]
    pub m: f64,
    #[arg(long, default_value_t = 0.5)]
    pub g_f: f64,
    #[arg(long)]
    pub rrr: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Simple,
    Complete,
}

#[derive(Debug, Args)]
pub struct HeatingArgs {
    /// Current density in A/cm², single value or LO:HI or LO:HI:COUNT (log-spaced).
    #[arg(long)]
    pub j: String,
    /// Heating duration in s.
    #[arg(long = "t", default_value_t = 30.0)]
    pub duration: f64,
    /// Wire width in µm.
    #[arg(long, default_value_t = 5.0)]
    pub width: f64,
    /// Wire thickness in µm.
    #[arg(long, default_value_t = 1.4)]
    pub thickness: f64,
    /// Wire resistivity in µΩ·cm.
    #[arg(long, default_value_t = 2.21)]
    pub rho: f64,
    /// Base temperature T₀ in K.
    #[arg(long = "T0", default_value_t = 300.0)]
    pub base_temperature: f64,
    /// Contact-layer conductance k in W/(m²·K) (calibrated default).
    #[arg(long)]
    pub k: Option<f64>,
    /// Substrate thermal conductivity λ in W/(m·K).
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Substrate volumetric heat capacity C in J/(m³·K).
    #[arg(long)]
    pub heat_capacity: Option<f64>,
    /// Re-evaluate ρ(T₀+ΔT) once using a database metal's model.
    #[arg(long, requires = "metal")]
    pub self_consistent: bool,
    /// Metal whose ρ(T) model feeds --self-consistent.
    #[arg(long)]
    pub metal: Option<String>,
}

#[derive(Debug, Args)]
pub struct ScreenArgs {
    /// Temperature in K.
    #[arg(long = "T")]
    pub temperature: f64,
    /// Residual-resistance ratio applied to every metal.
    #[arg(long)]
    pub rrr: Option<f64>,
}

#[derive(Debug, Args)]
pub struct BoundaryArgs {
    /// Alloy family as SOLVENT:SOLUTE, e.g. Ag:Au.
    #[arg(long)]
    pub family: String,
    /// Temperature in K.
    #[arg(long = "T", default_value_t = 4.2)]
    pub temperature: f64,
    /// Resistivity target in µΩ·cm (default: the gold standard).
    #[arg(long, default_value_t = chipnoise_core::constants::RHO_AU_300K_UOHM_CM)]
    pub rho_target: f64,
}

#[derive(Debug, Args)]
pub struct CrossoverArgs {
    /// First wire material: metal name or SOLVENT:SOLUTE:X.
    #[arg(long)]
    pub wire_a: String,
    /// First wire temperature in K.
    #[arg(long)]
    pub temp_a: f64,
    /// Resistivity override for wire A in µΩ·cm.
    #[arg(long)]
    pub rho_a: Option<f64>,
    /// Second wire material: metal name or SOLVENT:SOLUTE:X.
    #[arg(long)]
    pub wire_b: String,
    /// Second wire temperature in K.
    #[arg(long)]
    pub temp_b: f64,
    /// Resistivity override for wire B in µΩ·cm.
    #[arg(long)]
    pub rho_b: Option<f64>,
    /// Noise frequency: `0.79MHz` or a bias field `0.57G`.
    #[arg(long, default_value = "0.79MHz")]
    pub f: String,
    /// Distance search range LO:HI in µm.
    #[arg(long = "d-range", default_value = "1:200")]
    pub d_range: String,
    #[arg(long)]
    pub rrr: Option<f64>,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    /// Figure id.
    #[arg(value_enum)]
    pub id: FigureId,
    /// Directory receiving the CSV files and the plot script.
    #[arg(long, default_value = "figures")]
    pub out_dir: PathBuf,
    /// Experimental points CSV copied alongside the curves for overlaying.
    #[arg(long)]
    pub overlay: Option<PathBuf>,
}

/// Optional JSON config file: `{"db": "path", "heating": {...}}`.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    db: Option<PathBuf>,
    heating: Option<HeatingDefaults>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct HeatingDefaults {
    contact_conductance_w_m2k: Option<f64>,
    substrate_conductivity_w_mk: Option<f64>,
    substrate_heat_capacity_j_m3k: Option<f64>,
}

fn load_config(path: Option<&Path>) -> Result<ConfigFile, CliError> {
    match path {
        None => Ok(ConfigFile::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Io(format!("cannot read config {}: {e}", p.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| CliError::Domain(format!("config {}: {e}", p.display())))
        }
    }
}

fn resolve_db(cli: &Cli, config: &ConfigFile) -> Result<MaterialDb, CliError> {
    let path = cli.db.as_deref().or(config.db.as_deref());
    Ok(db::resolve_db(path)?)
}

/// Unknown material errors list what the database does provide.
fn metal_or_suggest<'d>(
    database: &'d MaterialDb,
    name: &str,
) -> Result<&'d chipnoise_core::materials::MaterialRecord, CliError> {
    database.metal(name).map_err(|_| {
        let known: Vec<&str> = database.metals().map(|m| m.name.as_str()).collect();
        CliError::Domain(format!(
            "unknown material `{name}`; available: {}",
            known.join(", ")
        ))
    })
}

fn build_alloy(database: &MaterialDb, arg: &AlloyArg) -> Result<AlloySpec, CliError> {
    metal_or_suggest(database, &arg.solvent)?;
    let alloy = database
        .make_alloy(&arg.solvent, &arg.solute, arg.x_at_pct)
        .map_err(|_| {
            let known: Vec<String> = database
                .alloy_families()
                .iter()
                .map(|f| format!("{}:{}", f.solvent, f.solute))
                .collect();
            CliError::Domain(format!(
                "unknown alloy family `{}:{}`; available: {}",
                arg.solvent,
                arg.solute,
                known.join(", ")
            ))
        })?;
    if alloy.beyond_linear_range() {
        eprintln!(
            "warning: {} at.% exceeds the ~15 at.% linearity range of the residual model",
            alloy.concentration_at_pct
        );
    }
    Ok(alloy)
}

/// The conductors a command can sweep: a database metal (optionally with a
/// different residual-resistance ratio) or an alloy built from a family.
enum Material {
    Metal(chipnoise_core::materials::MaterialRecord),
    Alloy(AlloySpec),
}

impl Material {
    fn resolve(
        database: &MaterialDb,
        metal: Option<&str>,
        alloy: Option<&str>,
        rrr: Option<f64>,
    ) -> Result<Material, CliError> {
        match (metal, alloy) {
            (Some(name), None) => {
                let mut record = metal_or_suggest(database, name)?.clone();
                if let Some(r) = rrr {
                    record = record.with_rrr(r).map_err(CliError::from_core)?;
                }
                Ok(Material::Metal(record))
            }
            (None, Some(triple)) => {
                let arg = crate::units::parse_alloy(triple)?;
                Ok(Material::Alloy(build_alloy(database, &arg)?))
            }
            (None, None) => Err(CliError::Usage(
                "specify a material with --metal or --alloy".into(),
            )),
            (Some(_), Some(_)) => Err(CliError::Usage(
                "--metal and --alloy are mutually exclusive".into(),
            )),
        }
    }

    fn label(&self) -> String {
        match self {
            Material::Metal(m) => m.name.clone(),
            Material::Alloy(a) => a.label(),
        }
    }

    fn resistivity(&self, t_k: f64) -> Result<f64, CliError> {
        match self {
            Material::Metal(m) => m.resistivity(t_k),
            Material::Alloy(a) => a.resistivity(t_k),
        }
        .map_err(CliError::from_core)
    }

    fn residual(&self) -> f64 {
        match self {
            Material::Metal(m) => m.residual_resistivity(),
            Material::Alloy(a) => a.residual_resistivity(),
        }
    }

    fn phonon(&self, t_k: f64) -> Result<f64, CliError> {
        match self {
            Material::Metal(m) => m.phonon_resistivity(t_k),
            Material::Alloy(a) => a.phonon_resistivity(t_k),
        }
        .map_err(CliError::from_core)
    }
}

/// Resolve (T, ρ): explicit override first, else the material model.
fn operating_point(
    database: &MaterialDb,
    metal: Option<&str>,
    alloy: Option<&str>,
    rho: Option<f64>,
    rrr: Option<f64>,
    t_k: f64,
) -> Result<OperatingPoint, CliError> {
    let rho = match rho {
        Some(r) => r,
        None => Material::resolve(database, metal, alloy, rrr)?.resistivity(t_k)?,
    };
    OperatingPoint::new(t_k, rho).map_err(CliError::from_core)
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let config = load_config(cli.config.as_deref())?;
    let table = match &cli.command {
        Command::Resistivity(args) => cmd_resistivity(&cli, &config, args)?,
        Command::Noise(args) => cmd_noise(&cli, &config, args)?,
        Command::Lifetime(args) => cmd_lifetime(&cli, &config, args)?,
        Command::Heating(args) => cmd_heating(&cli, &config, args)?,
        Command::Screen(args) => cmd_screen(&cli, &config, args)?,
        Command::Boundary(args) => cmd_boundary(&cli, &config, args)?,
        Command::Crossover(args) => cmd_crossover(&cli, &config, args)?,
        Command::Figure(args) => {
            let database = resolve_db(&cli, &config)?;
            let files = write_figure(args.id, &database, &args.out_dir, args.overlay.as_deref())?;
            let mut t = Table::new(["file"]);
            for f in files {
                t.push_row(vec![f.display().to_string().into()]);
            }
            t
        }
    };
    emit(&cli, &table)
}

fn emit(cli: &Cli, table: &Table) -> Result<(), CliError> {
    let format: Format = cli.format.into();
    match &cli.output {
        Some(path) => {
            let mut file = File::create(path)
                .map_err(|e| CliError::Io(format!("cannot create {}: {e}", path.display())))?;
            table
                .write(format, &mut file)
                .map_err(|e| CliError::Io(e.to_string()))
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            table
                .write(format, &mut lock)
                .map_err(|e| CliError::Io(e.to_string()))?;
            lock.flush().map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

fn temperature_grid(arg: &str) -> Result<Vec<f64>, CliError> {
    Ok(parse_value_or_range(arg)?.grid(Spacing::Linear, 150)?)
}

fn cmd_resistivity(
    cli: &Cli,
    config: &ConfigFile,
    args: &ResistivityArgs,
) -> Result<Table, CliError> {
    let database = resolve_db(cli, config)?;
    let material = Material::resolve(
        &database,
        args.metal.as_deref(),
        args.alloy.as_deref(),
        args.rrr,
    )?;
    let grid = temperature_grid(&args.temperature)?;
    let mut table = Table::new([
        "material",
        "T_K",
        "rho_uOhm_cm",
        "rho0_uOhm_cm",
        "rho_ph_uOhm_cm",
    ]);
    for &t in &grid {
        let rho_ph = material.phonon(t)?;
        let rho0 = material.residual();
        table.push_row(vec![
            material.label().into(),
            t.into(),
            (rho0 + rho_ph).into(),
            rho0.into(),
            rho_ph.into(),
        ]);
    }
    Ok(table)
}

fn cmd_noise(cli: &Cli, config: &ConfigFile, args: &NoiseArgs) -> Result<Table, CliError> {
    let database = resolve_db(cli, config)?;
    let wire = operating_point(
        &database,
        args.metal.as_deref(),
        args.alloy.as_deref(),
        args.rho,
        args.rrr,
        args.temperature,
    )?;
    let geom = parse_wire(&args.wire)?;
    let field = parse_bias_field(&args.field)?;
    let heights = parse_value_or_range(&args.heights)?.grid(Spacing::Log, 61)?;

    let mut table = Table::new([
        "d_um",
        "Yxx_per_um",
        "Yyy_per_um",
        "Yzz_per_um",
        "Yzx_per_um",
        "Sxx_T2_per_Hz",
        "Syy_T2_per_Hz",
        "Szz_T2_per_Hz",
        "gamma21_per_s",
        "noise_norm",
        "skin_factor",
    ]);
    for &d in &heights {
        let point = TrapPoint::new(args.x, d).map_err(CliError::from_core)?;
        let trap = TrapSpec::new(point, field, args.f_total, args.m, args.g_f)
            .map_err(CliError::from_core)?;
        let y = y_slab(geom, point).map_err(CliError::from_core)?;
        let s = spectral_density(wire.temperature_k, wire.rho_uohm_cm, &y)
            .map_err(CliError::from_core)?;
        let mut gamma = spin_flip_rate(wire.temperature_k, wire.rho_uohm_cm, &y, &trap)
            .map_err(CliError::from_core)?;
        let factor = if args.skin_correction {
            let delta = skin_depth(wire.rho_uohm_cm, trap.larmor_mhz()).map_err(CliError::from_core)?;
            interp_factor(d, delta).map_err(CliError::from_core)?
        } else {
            1.0
        };
        gamma *= factor;
        table.push_row(vec![
            d.into(),
            y.xx().into(),
            y.yy().into(),
            y.zz().into(),
            y.zx().into(),
            (s.get(0, 0) * factor).into(),
            (s.get(1, 1) * factor).into(),
            (s.get(2, 2) * factor).into(),
            gamma.into(),
            material_noise_norm(wire.temperature_k, wire.rho_uohm_cm).into(),
            factor.into(),
        ]);
    }
    Ok(table)
}

fn cmd_lifetime(cli: &Cli, config: &ConfigFile, args: &LifetimeArgs) -> Result<Table, CliError> {
    let database = resolve_db(cli, config)?;
    let wire = operating_point(
        &database,
        args.metal.as_deref(),
        args.alloy.as_deref(),
        args.rho,
        args.rrr,
        args.temperature,
    )?;
    let geom = parse_wire(&args.wire)?;
    let field = parse_bias_field(&args.field)?;
    let heights = parse_value_or_range(&args.heights)?.grid(Spacing::Log, 61)?;
    let trap = TrapSpec::new(
        TrapPoint::above_center(heights[0]).map_err(CliError::from_core)?,
        field,
        args.f_total,
        args.m,
        args.g_f,
    )
    .map_err(CliError::from_core)?;
    let params = LifetimeCurveParams {
        wire,
        geom,
        trap,
        tau_tech_s: args.tau_tech,
        model: match args.model {
            ModelArg::Simple => LifetimeModel::Simple,
            ModelArg::Complete => LifetimeModel::Complete,
        },
        skin_correction: args.skin_correction,
    };
    let curve = lifetime_curve(&params, &heights).map_err(CliError::from_core)?;
    let mut table = Table::new(["d_um", "gamma21_per_s", "tau_mag_s", "tau_trap_s"]);
    for p in curve {
        table.push_row(vec![
            p.height_um.into(),
            p.gamma21_per_s.into(),
            p.tau_mag_s.into(),
            p.tau_trap_s.into(),
        ]);
    }
    Ok(table)
}

fn cmd_heating(cli: &Cli, config: &ConfigFile, args: &HeatingArgs) -> Result<Table, CliError> {
    let defaults = HeatingConfig::default();
    let heating_cfg = config.heating.as_ref();
    let base = HeatingConfig {
        width_um: args.width,
        height_um: args.thickness,
        rho_uohm_cm: args.rho,
        current_density_a_cm2: 0.0,
        contact_conductance_w_m2k: args
            .k
            .or(heating_cfg.and_then(|h| h.contact_conductance_w_m2k))
            .unwrap_or(defaults.contact_conductance_w_m2k),
        substrate_conductivity_w_mk: args
            .lambda
            .or(heating_cfg.and_then(|h| h.substrate_conductivity_w_mk))
            .unwrap_or(defaults.substrate_conductivity_w_mk),
        substrate_heat_capacity_j_m3k: args
            .heat_capacity
            .or(heating_cfg.and_then(|h| h.substrate_heat_capacity_j_m3k))
            .unwrap_or(defaults.substrate_heat_capacity_j_m3k),
        duration_s: args.duration,
        base_temperature_k: args.base_temperature,
    };

    let current_grid = match parse_value_or_range(&args.j)? {
        ValueOrRange::Single(v) => vec![v],
        range => range.grid(Spacing::Log, 13)?,
    };

    let model_record = if args.self_consistent {
        let database = resolve_db(cli, config)?;
        let name = args.metal.as_deref().expect("clap enforces --metal");
        Some(metal_or_suggest(&database, name)?.clone())
    } else {
        None
    };

    let mut table = Table::new(["j_A_per_cm2", "fast_K", "slow_K", "total_K"]);
    for &j in &current_grid {
        let cfg = HeatingConfig {
            current_density_a_cm2: j,
            ..base
        };
        let (fast, slow, total) = if let Some(record) = &model_record {
            let total = heating::total_rise_self_consistent(&cfg, |t| record.resistivity(t))
                .map_err(CliError::from_core)?;
            // Stage split recomputed at the self-consistent resistivity.
            let rho = record
                .resistivity(cfg.base_temperature_k + total)
                .map_err(CliError::from_core)?;
            let cfg2 = HeatingConfig {
                rho_uohm_cm: rho,
                ..cfg
            };
            (
                heating::fast_rise(&cfg2).map_err(CliError::from_core)?,
                heating::slow_rise(&cfg2).map_err(CliError::from_core)?.delta_t_k,
                total,
            )
        } else {
            (
                heating::fast_rise(&cfg).map_err(CliError::from_core)?,
                heating::slow_rise(&cfg).map_err(CliError::from_core)?.delta_t_k,
                heating::total_rise(&cfg).map_err(CliError::from_core)?,
            )
        };
        table.push_row(vec![j.into(), fast.into(), slow.into(), total.into()]);
    }
    Ok(table)
}

fn cmd_screen(cli: &Cli, config: &ConfigFile, args: &ScreenArgs) -> Result<Table, CliError> {
    let database = resolve_db(cli, config)?;
    let points = screen_metals(&database, args.temperature, args.rrr).map_err(CliError::from_core)?;
    let mut table = Table::new([
        "metal",
        "T_K",
        "rho_uOhm_cm",
        "rho_norm",
        "noise_norm",
        "better_than_gold",
    ]);
    for p in points {
        table.push_row(vec![
            p.label.into(),
            p.temperature_k.into(),
            p.rho_uohm_cm.into(),
            p.rho_norm.into(),
            p.noise_norm.into(),
            p.better_than_gold.into(),
        ]);
    }
    Ok(table)
}

fn cmd_boundary(cli: &Cli, config: &ConfigFile, args: &BoundaryArgs) -> Result<Table, CliError> {
    let database = resolve_db(cli, config)?;
    let (solvent_name, solute_name) = args
        .family
        .split_once(':')
        .ok_or_else(|| CliError::Usage("expected --family SOLVENT:SOLUTE".into()))?;
    let solvent = metal_or_suggest(&database, solvent_name)?;
    let family = database
        .alloy_family(solvent_name, solute_name)
        .map_err(|e| CliError::Domain(e.to_string()))?;
    let x = boundary_concentration(
        solvent,
        family.slope_uohm_cm_per_at_pct,
        args.temperature,
        args.rho_target,
    )
    .map_err(CliError::from_core)?;
    let mut table = Table::new([
        "family",
        "T_K",
        "rho_target_uOhm_cm",
        "x_at_pct",
    ]);
    table.push_row(vec![
        format!("{solvent_name}-{solute_name}").into(),
        args.temperature.into(),
        args.rho_target.into(),
        x.into(),
    ]);
    Ok(table)
}

fn cmd_crossover(cli: &Cli, config: &ConfigFile, args: &CrossoverArgs) -> Result<Table, CliError> {
    let database = resolve_db(cli, config)?;
    let resolve_side = |material: &str, t: f64, rho: Option<f64>| -> Result<OperatingPoint, CliError> {
        let rho = match rho {
            Some(r) => r,
            None => match parse_wire_material(material)? {
                WireMaterial::Metal(name) => {
                    let mut rec = metal_or_suggest(&database, &name)?.clone();
                    if let Some(r) = args.rrr {
                        rec = rec.with_rrr(r).map_err(CliError::from_core)?;
                    }
                    rec.resistivity(t).map_err(CliError::from_core)?
                }
                WireMaterial::Alloy(arg) => build_alloy(&database, &arg)?
                    .resistivity(t)
                    .map_err(CliError::from_core)?,
            },
        };
        OperatingPoint::new(t, rho).map_err(CliError::from_core)
    };
    let a = resolve_side(&args.wire_a, args.temp_a, args.rho_a)?;
    let b = resolve_side(&args.wire_b, args.temp_b, args.rho_b)?;

    let f_mhz = match parse_bias_field(&args.f)? {
        BiasField::LarmorMhz(f) => f,
        BiasField::Gauss(g) => chipnoise_core::noise::larmor_frequency_mhz(g),
    };
    let range = match parse_value_or_range(&args.d_range)? {
        ValueOrRange::Range { lo, hi, .. } => (lo, hi),
        ValueOrRange::Single(_) => {
            return Err(CliError::Usage("--d-range needs LO:HI in um".into()))
        }
    };
    let crossing = crossover_distance(a, b, f_mhz, range).map_err(CliError::from_core)?;
    let mut table = Table::new([
        "rho_a_uOhm_cm",
        "rho_b_uOhm_cm",
        "f_MHz",
        "found",
        "d_star_um",
    ]);
    table.push_row(vec![
        a.rho_uohm_cm.into(),
        b.rho_uohm_cm.into(),
        f_mhz.into(),
        crossing.is_some().into(),
        crossing.unwrap_or(f64::NAN).into(),
    ]);
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn unknown_material_lists_alternatives() {
        let database = db::bundled_db();
        let err = metal_or_suggest(&database, "Unobtanium").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("Cu") && msg.contains("Zr"), "{msg}");
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn operating_point_prefers_rho_override() {
        let database = db::bundled_db();
        let p = operating_point(&database, Some("Cu"), None, Some(2.64), None, 400.0).unwrap();
        assert_eq!(p.rho_uohm_cm, 2.64);
    }
}
