//! Bundled figure reproductions: each figure id writes one CSV per curve
//! plus a generic gnuplot script into the output directory.

use std::fs;
use std::path::{Path, PathBuf};

use chipnoise_core::constants::RHO_AU_300K_UOHM_CM;
use chipnoise_core::geometry::{interp_factor, skin_depth, TrapPoint, YTensor};
use chipnoise_core::heating::{total_rise, HeatingConfig};
use chipnoise_core::lifetime::{
    lifetime_curve, simple_lifetime, total_lifetime, CascadeRates, LifetimeCurveParams,
    LifetimeModel,
};
use chipnoise_core::materials::{Conductor, MaterialDb, OperatingPoint};
use chipnoise_core::noise::{material_noise_norm, spin_flip_rate, BiasField, TrapSpec};
use chipnoise_core::screening::screen_metals;

use crate::cli::CliError;
use crate::output::{Format, Table};
use crate::units::parse_wire;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FigureId {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Fig6,
    Fig9,
}

/// Temperature grid shared by the material figures.
fn temperature_grid() -> Vec<f64> {
    (0..150)
        .map(|i| 4.2 + (300.0 - 4.2) * i as f64 / 149.0)
        .collect()
}

/// Log-spaced heights used by the lifetime figures, 1–100 µm.
fn height_grid() -> Vec<f64> {
    (0..61)
        .map(|i| 100.0f64.powf(i as f64 / 60.0))
        .collect()
}

fn write_table(dir: &Path, name: &str, table: &Table) -> Result<PathBuf, CliError> {
    let path = dir.join(name);
    let mut buf = Vec::new();
    table
        .write(Format::Csv, &mut buf)
        .map_err(|e| CliError::Io(format!("cannot serialize {name}: {e}")))?;
    fs::write(&path, buf).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
    Ok(path)
}

fn write_script(dir: &Path, name: &str, body: &str) -> Result<PathBuf, CliError> {
    let path = dir.join(name);
    fs::write(&path, body)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
    Ok(path)
}

pub fn write_figure(
    id: FigureId,
    db: &MaterialDb,
    out_dir: &Path,
    overlay: Option<&Path>,
) -> Result<Vec<PathBuf>, CliError> {
    fs::create_dir_all(out_dir)
        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", out_dir.display())))?;
    let mut written = match id {
        FigureId::Fig1 => fig1(db, out_dir)?,
        FigureId::Fig2 => fig2(db, out_dir)?,
        FigureId::Fig3 => fig3(db, out_dir)?,
        FigureId::Fig4 => fig4(db, out_dir)?,
        FigureId::Fig5 => fig5(db, out_dir)?,
        FigureId::Fig6 => fig6(out_dir)?,
        FigureId::Fig9 => fig9(out_dir)?,
    };
    if let Some(src) = overlay {
        let dst = out_dir.join("overlay.csv");
        fs::copy(src, &dst)
            .map_err(|e| CliError::Io(format!("cannot copy overlay {}: {e}", src.display())))?;
        written.push(dst);
    }
    Ok(written)
}

/// Normalized noise and resistivity of the four classic wire metals versus
/// temperature.
fn fig1(db: &MaterialDb, dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let grid = temperature_grid();
    let mut files = Vec::new();
    for name in ["Cu", "Ag", "Au", "Nb"] {
        let metal = db.metal(name).map_err(CliError::from_core)?;
        let mut table = Table::new(["T_K", "rho_uOhm_cm", "noise_norm"]);
        for &t in &grid {
            let rho = metal.resistivity(t).map_err(CliError::from_core)?;
            table.push_row(vec![
                t.into(),
                rho.into(),
                material_noise_norm(t, rho).into(),
            ]);
        }
        files.push(write_table(dir, &format!("fig1_{name}.csv"), &table)?);
    }
    let script = "\
# fig1: normalized magnetic noise of pure metal wires vs temperature
set datafile separator comma
set key autotitle columnhead
set xlabel 'T (K)'
set ylabel 'noise relative to Au at 300 K'
set logscale y
plot 'fig1_Cu.csv' using 1:3 with lines title 'Cu', \\
     'fig1_Ag.csv' using 1:3 with lines title 'Ag', \\
     'fig1_Au.csv' using 1:3 with lines title 'Au', \\
     'fig1_Nb.csv' using 1:3 with lines title 'Nb'
";
    files.push(write_script(dir, "fig1.gnuplot", script)?);
    Ok(files)
}

/// Noise-vs-resistivity scatter of all database metals at 77 K and 20 K.
fn fig2(db: &MaterialDb, dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let mut files = Vec::new();
    for t in [77.0, 20.0] {
        let points = screen_metals(db, t, None).map_err(CliError::from_core)?;
        let mut table = Table::new([
            "metal",
            "T_K",
            "rho_norm",
            "noise_norm",
            "better_than_gold",
        ]);
        for p in points {
            table.push_row(vec![
                p.label.into(),
                p.temperature_k.into(),
                p.rho_norm.into(),
                p.noise_norm.into(),
                p.better_than_gold.into(),
            ]);
        }
        files.push(write_table(dir, &format!("fig2_T{t:.0}.csv"), &table)?);
    }
    let script = "\
# fig2: normalized noise vs normalized resistivity at fixed temperature;
# the sloped guides are the iso-temperature lines noise*rho = T/300.
set datafile separator comma
set key autotitle columnhead
set logscale xy
set xlabel 'rho / rho_Au(300 K)'
set ylabel 'noise relative to Au at 300 K'
plot 'fig2_T77.csv' using 3:4 with points title '77 K', \\
     'fig2_T20.csv' using 3:4 with points title '20 K', \\
     (77.0/300.0)/x with lines dashtype 2 title 'T = 77 K line', \\
     (20.0/300.0)/x with lines dashtype 2 title 'T = 20 K line', \\
     1 with lines dashtype 3 notitle, \\
     'fig2_T77.csv' using (1.0):(1.0) with points pointtype 7 notitle
";
    files.push(write_script(dir, "fig2.gnuplot", script)?);
    Ok(files)
}

const FIG3_CONCENTRATIONS: [f64; 6] = [0.1, 0.25, 0.5, 1.0, 2.0, 5.0];

/// Temperature dependence of the normalized noise for silver and its gold
/// alloys.
fn fig3(db: &MaterialDb, dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let grid = temperature_grid();
    let mut files = Vec::new();

    let silver = db.metal("Ag").map_err(CliError::from_core)?;
    let mut pure = Table::new(["T_K", "noise_norm"]);
    for &t in &grid {
        let rho = silver.resistivity(t).map_err(CliError::from_core)?;
        pure.push_row(vec![t.into(), material_noise_norm(t, rho).into()]);
    }
    files.push(write_table(dir, "fig3_Ag_pure.csv", &pure)?);

    for x in FIG3_CONCENTRATIONS {
        let alloy = db.make_alloy("Ag", "Au", x).map_err(CliError::from_core)?;
        let mut table = Table::new(["T_K", "noise_norm"]);
        for &t in &grid {
            let rho = alloy.resistivity(t).map_err(CliError::from_core)?;
            table.push_row(vec![t.into(), material_noise_norm(t, rho).into()]);
        }
        files.push(write_table(dir, &format!("fig3_AgAu_x{x}.csv"), &table)?);
    }

    let mut script = String::from(
        "# fig3: normalized noise of silver and Ag-Au alloys vs temperature\n\
         set datafile separator comma\nset key autotitle columnhead\n\
         set xlabel 'T (K)'\nset ylabel 'noise relative to Au at 300 K'\nset logscale y\n\
         plot 'fig3_Ag_pure.csv' using 1:2 with lines title 'pure Ag'",
    );
    for x in FIG3_CONCENTRATIONS {
        script.push_str(&format!(
            ", \\\n     'fig3_AgAu_x{x}.csv' using 1:2 with lines title 'Ag+{x}%Au'"
        ));
    }
    script.push('\n');
    files.push(write_script(dir, "fig3.gnuplot", &script)?);
    Ok(files)
}

const FIG4B_CU_AU: [f64; 3] = [1.0, 2.0, 4.5];
const FIG4B_CU_GE: [f64; 3] = [0.1, 0.25, 0.52];

/// Parametric noise-vs-resistivity trajectories of the three alloy families
/// as the temperature sweeps 4.2–300 K.
fn fig4(db: &MaterialDb, dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let grid = temperature_grid();
    let mut files = Vec::new();
    let mut curves: Vec<(String, &str, &str, f64)> = Vec::new();
    for x in FIG3_CONCENTRATIONS {
        curves.push((format!("fig4a_AgAu_x{x}.csv"), "Ag", "Au", x));
    }
    for x in FIG4B_CU_AU {
        curves.push((format!("fig4b_CuAu_x{x}.csv"), "Cu", "Au", x));
    }
    for x in FIG4B_CU_GE {
        curves.push((format!("fig4b_CuGe_x{x}.csv"), "Cu", "Ge", x));
    }

    for (file, solvent, solute, x) in &curves {
        let alloy = db
            .make_alloy(solvent, solute, *x)
            .map_err(CliError::from_core)?;
        let mut table = Table::new(["T_K", "rho_norm", "noise_norm"]);
        for &t in &grid {
            let rho = alloy.resistivity(t).map_err(CliError::from_core)?;
            table.push_row(vec![
                t.into(),
                (rho / RHO_AU_300K_UOHM_CM).into(),
                material_noise_norm(t, rho).into(),
            ]);
        }
        files.push(write_table(dir, file, &table)?);
    }

    let mut script = String::from(
        "# fig4: alloy noise vs resistivity, parametric in temperature\n\
         set datafile separator comma\nset key autotitle columnhead\n\
         set logscale xy\nset xlabel 'rho / rho_Au(300 K)'\n\
         set ylabel 'noise relative to Au at 300 K'\nplot \\\n",
    );
    for (i, (file, solvent, solute, x)) in curves.iter().enumerate() {
        let sep = if i + 1 == curves.len() { "\n" } else { ", \\\n" };
        script.push_str(&format!(
            "     '{file}' using 2:3 with lines title '{solvent}+{x}%{solute}'{sep}"
        ));
    }
    files.push(write_script(dir, "fig4.gnuplot", &script)?);
    Ok(files)
}

fn reference_trap(height: f64) -> TrapSpec {
    TrapSpec::rb87_stretched(
        TrapPoint::above_center(height).expect("positive height"),
        BiasField::Gauss(0.57),
    )
    .expect("valid trap")
}

/// Predicted trap lifetime above the reference wire for warm copper and
/// cooled gold-standard alloys.
fn fig5(db: &MaterialDb, dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let _ = db; // curves pin their resistivities; the db documents the alloys
    let heights = height_grid();
    let geom = parse_wire("10x2.15").expect("reference wire");
    let curves = [
        ("fig5_Cu_400K.csv", 400.0, 2.64),
        ("fig5_AgAu5.4_77K.csv", 77.0, RHO_AU_300K_UOHM_CM),
        ("fig5_AgAu6_4.2K.csv", 4.2, RHO_AU_300K_UOHM_CM),
    ];
    let mut files = Vec::new();
    for (file, t, rho) in curves {
        let params = LifetimeCurveParams {
            wire: OperatingPoint::new(t, rho).map_err(CliError::from_core)?,
            geom,
            trap: reference_trap(1.0),
            tau_tech_s: 2.5,
            model: LifetimeModel::Complete,
            skin_correction: false,
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
        files.push(write_table(dir, file, &table)?);
    }
    let script = "\
# fig5: trap lifetime vs height: warm copper wire against cooled alloys
set datafile separator comma
set key autotitle columnhead
set logscale xy
set xlabel 'height above wire (um)'
set ylabel 'trap lifetime (s)'
plot 'fig5_Cu_400K.csv' using 1:4 with lines title 'Cu, 400 K', \\
     'fig5_AgAu5.4_77K.csv' using 1:4 with lines dashtype 2 title 'Ag+5.4%Au, 77 K', \\
     'fig5_AgAu6_4.2K.csv' using 1:4 with lines dashtype 4 title 'Ag+6%Au, 4.2 K'
";
    files.push(write_script(dir, "fig5.gnuplot", script)?);
    Ok(files)
}

/// The two cascade reductions side by side over the warm copper wire, plus
/// a reference-style estimate (half-space tensor with the skin-depth
/// interpolation factor feeding the one-way cascade).
fn fig6(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let heights = height_grid();
    let geom = parse_wire("10x2.15").expect("reference wire");
    let wire = OperatingPoint::new(400.0, 2.64).map_err(CliError::from_core)?;
    let base = LifetimeCurveParams {
        wire,
        geom,
        trap: reference_trap(1.0),
        tau_tech_s: 2.5,
        model: LifetimeModel::Complete,
        skin_correction: false,
    };
    let complete = lifetime_curve(&base, &heights).map_err(CliError::from_core)?;
    let simple = lifetime_curve(
        &LifetimeCurveParams {
            model: LifetimeModel::Simple,
            ..base
        },
        &heights,
    )
    .map_err(CliError::from_core)?;

    let delta = skin_depth(wire.rho_uohm_cm, base.trap.larmor_mhz()).map_err(CliError::from_core)?;
    let pi = std::f64::consts::PI;
    let mut table = Table::new([
        "d_um",
        "tau_mag_simple_s",
        "tau_mag_complete_s",
        "ratio_complete_simple",
        "tau_trap_simple_s",
        "tau_trap_complete_s",
        "tau_trap_reference_style_s",
    ]);
    for (c, s) in complete.iter().zip(&simple) {
        let d = c.height_um;
        // Half-space tensor scaled by the interpolation factor stands in for
        // the reference calculation's interpolated geometry.
        let y_half = YTensor::from_symmetric([
            [3.0 * pi / (8.0 * d), 0.0, 0.0],
            [0.0, 3.0 * pi / (8.0 * d), 0.0],
            [0.0, 0.0, pi / (4.0 * d)],
        ]);
        let gamma_ref = spin_flip_rate(wire.temperature_k, wire.rho_uohm_cm, &y_half, &base.trap)
            .map_err(CliError::from_core)?
            * interp_factor(d, delta).map_err(CliError::from_core)?;
        let tau_ref = simple_lifetime(CascadeRates::from_gamma21(gamma_ref).map_err(CliError::from_core)?)
            .map_err(CliError::from_core)?;
        let tau_ref_trap = total_lifetime(tau_ref, base.tau_tech_s).map_err(CliError::from_core)?;
        table.push_row(vec![
            d.into(),
            s.tau_mag_s.into(),
            c.tau_mag_s.into(),
            (c.tau_mag_s / s.tau_mag_s).into(),
            s.tau_trap_s.into(),
            c.tau_trap_s.into(),
            tau_ref_trap.into(),
        ]);
    }
    let mut files = vec![write_table(dir, "fig6_models.csv", &table)?];
    let script = "\
# fig6: one-way vs bidirectional cascade lifetimes over the warm copper wire
set datafile separator comma
set key autotitle columnhead
set logscale xy
set xlabel 'height above wire (um)'
set ylabel 'trap lifetime (s)'
plot 'fig6_models.csv' using 1:6 with lines title 'complete', \\
     'fig6_models.csv' using 1:5 with lines dashtype 2 title 'simple', \\
     'fig6_models.csv' using 1:7 with lines dashtype 4 title 'reference style'
";
    files.push(write_script(dir, "fig6.gnuplot", script)?);
    Ok(files)
}

const FIG9_CURRENT_DENSITIES: [f64; 3] = [1e6, 3e6, 1e7];

/// Ohmic temperature rise versus base temperature for three current
/// densities (constant resistivity, so the curves are flat in T₀).
fn fig9(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let mut table = Table::new([
        "T0_K",
        "dT_j1e6_K",
        "dT_j3e6_K",
        "dT_j1e7_K",
    ]);
    let grid: Vec<f64> = (0..150)
        .map(|i| 4.2 + (300.0 - 4.2) * i as f64 / 149.0)
        .collect();
    for &t0 in &grid {
        let mut row = vec![Into::<crate::output::Cell>::into(t0)];
        for j in FIG9_CURRENT_DENSITIES {
            let cfg = HeatingConfig {
                current_density_a_cm2: j,
                base_temperature_k: t0,
                ..Default::default()
            };
            row.push(total_rise(&cfg).map_err(CliError::from_core)?.into());
        }
        table.push_row(row);
    }
    let mut files = vec![write_table(dir, "fig9_heating.csv", &table)?];
    let script = "\
# fig9: wire temperature rise (fast step + 30 s slow stage) vs base temperature
set datafile separator comma
set key autotitle columnhead
set xlabel 'T0 (K)'
set ylabel 'temperature rise (K)'
set logscale y
plot 'fig9_heating.csv' using 1:2 with lines title 'j = 1e6 A/cm^2', \\
     'fig9_heating.csv' using 1:3 with lines title 'j = 3e6 A/cm^2', \\
     'fig9_heating.csv' using 1:4 with lines title 'j = 1e7 A/cm^2'
";
    files.push(write_script(dir, "fig9.gnuplot", script)?);
    Ok(files)
}
