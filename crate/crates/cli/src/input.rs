//! Input files and environment.

use std::fs;
use std::path::Path;

use sympro::exact_linalg::Scalar;
use sympro::prolongation::WitnessGrid;
use sympro::weyl_poisson::{SymTensor, SymplecticSpace};

pub const GRID_ENV: &str = "SYMPRO_WITNESS_GRID";

pub fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

/// Generators file: one tensor per line, `#` comments, optional `n N` header (default 2).
pub fn parse_gens(text: &str) -> Result<(SymplecticSpace, Vec<SymTensor<Scalar>>), String> {
    let mut n = 2;
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n ") {
            if !lines.is_empty() {
                return Err(format!("line {}: the 'n' header must precede the generators", i + 1));
            }
            n = rest.trim().parse().map_err(|_| format!("line {}: bad dimension {rest:?}", i + 1))?;
            if n == 0 {
                return Err(format!("line {}: n must be positive", i + 1));
            }
            continue;
        }
        lines.push((i + 1, line.to_string()));
    }
    let space = SymplecticSpace::new(n);
    let gens = lines
        .into_iter()
        .map(|(i, l)| space.parse(&l).map_err(|e| format!("line {i}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    if gens.is_empty() {
        return Err("no generators".into());
    }
    Ok((space, gens))
}

/// `;`-separated tensors.
pub fn parse_list(space: &SymplecticSpace, s: &str) -> Result<Vec<SymTensor<Scalar>>, String> {
    s.split(';').map(str::trim).filter(|x| !x.is_empty()).map(|x| space.parse(x).map_err(|e| e.to_string())).collect()
}

/// Witness grid from the environment, or the default.
pub fn grid() -> Result<WitnessGrid, String> {
    match std::env::var(GRID_ENV) {
        Ok(v) => WitnessGrid::parse(&v).map_err(|e| format!("{GRID_ENV}: {e}")),
        Err(_) => Ok(WitnessGrid::default()),
    }
}

/// The grid setting as given, for the config echo.
pub fn grid_text() -> String {
    std::env::var(GRID_ENV).unwrap_or_else(|_| sympro::prolongation::DEFAULT_GRID.to_string())
}
