use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::random_subset;
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::metric::{Norm, PointSet};

/// Number of leading records used from the census file.
pub const ADULT_ROWS: usize = 25_000;

/// Numeric columns kept as features: age, fnlwgt, education-num,
/// capital-gain, capital-loss, hours-per-week.
const FEATURE_COLUMNS: [usize; 6] = [0, 2, 4, 10, 11, 12];
const RACE_COLUMN: usize = 8;
const SEX_COLUMN: usize = 9;
const FIELDS: usize = 15;

/// Protected attribute used to form groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdultGrouping {
    /// Male = 0, Female = 1.
    Gender,
    /// White = 0, Asian-Pac-Islander = 1, Amer-Indian-Eskimo = 2, Other = 3, Black = 4.
    Race,
}

impl AdultGrouping {
    pub fn group_names(self) -> &'static [&'static str] {
        match self {
            AdultGrouping::Gender => &["Male", "Female"],
            AdultGrouping::Race => &[
                "White",
                "Asian-Pac-Islander",
                "Amer-Indian-Eskimo",
                "Other",
                "Black",
            ],
        }
    }

    fn column(self) -> usize {
        match self {
            AdultGrouping::Gender => SEX_COLUMN,
            AdultGrouping::Race => RACE_COLUMN,
        }
    }
}

/// Standardised features and group labels of the census sample.
#[derive(Debug, Clone)]
pub struct AdultData {
    pub points: PointSet,
    pub groups: Vec<usize>,
    pub grouping: AdultGrouping,
}

impl AdultData {
    pub fn group_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.grouping.group_names().len()];
        for &g in &self.groups {
            sizes[g] += 1;
        }
        sizes
    }
}

/// Reads the first [`ADULT_ROWS`] records (or all, if fewer).
///
/// The six numeric columns are standardised to zero mean and unit population
/// variance; distances are `l1`. Blank lines are skipped.
pub fn load_adult(path: impl AsRef<Path>, grouping: AdultGrouping) -> Result<AdultData> {
    let path = path.as_ref();
    if !path.exists() {
        return Err(Error::FileNotFound(path.to_path_buf()));
    }
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_path(path)?;
    let names = grouping.group_names();
    let mut rows: Vec<[f64; 6]> = Vec::new();
    let mut groups = Vec::new();
    for (i, record) in reader.records().enumerate() {
        if rows.len() == ADULT_ROWS {
            break;
        }
        let record = record?;
        let row = i + 1;
        if record.len() == 1 && record[0].is_empty() {
            continue;
        }
        if record.len() != FIELDS {
            return Err(Error::MalformedRow {
                row,
                reason: format!("expected {FIELDS} fields, found {}", record.len()),
            });
        }
        let mut features = [0.0; 6];
        for (slot, &col) in features.iter_mut().zip(&FEATURE_COLUMNS) {
            *slot = record[col].parse().map_err(|_| Error::MalformedRow {
                row,
                reason: format!("column {col} is not numeric: {:?}", &record[col]),
            })?;
        }
        let label = &record[grouping.column()];
        let group = names
            .iter()
            .position(|n| *n == label)
            .ok_or_else(|| Error::MalformedRow {
                row,
                reason: format!("unknown group label {label:?}"),
            })?;
        rows.push(features);
        groups.push(group);
    }
    if rows.is_empty() {
        return Err(Error::MalformedRow {
            row: 0,
            reason: "no records".into(),
        });
    }

    let n = rows.len() as f64;
    let mut coords = Vec::with_capacity(rows.len() * 6);
    let mut mean = [0.0; 6];
    let mut scale = [0.0; 6];
    for j in 0..6 {
        mean[j] = rows.iter().map(|r| r[j]).sum::<f64>() / n;
        let var = rows.iter().map(|r| (r[j] - mean[j]).powi(2)).sum::<f64>() / n;
        // A constant column carries no information; leave it at zero.
        scale[j] = if var > 0.0 { var.sqrt() } else { 1.0 };
    }
    for r in &rows {
        for j in 0..6 {
            coords.push((r[j] - mean[j]) / scale[j]);
        }
    }
    Ok(AdultData {
        points: PointSet::from_flat(6, coords, Norm::L1)?,
        groups,
        grouping,
    })
}

impl AdultData {
    /// Instance over this data with `c0_size` uniformly drawn fixed centers.
    pub fn instance(&self, quotas: &[usize], c0_size: usize, seed: u64) -> Result<Instance> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c0 = random_subset(&mut rng, self.groups.len(), c0_size)?;
        let names = self
            .grouping
            .group_names()
            .iter()
            .map(|s| s.to_string())
            .collect();
        Instance::new(
            self.points.clone(),
            self.groups.clone(),
            quotas.to_vec(),
            c0,
        )?
        .with_group_names(names)
    }
}

/// Loads the census file and builds one instance from it.
pub fn ingest_adult(
    path: impl AsRef<Path>,
    grouping: AdultGrouping,
    quotas: &[usize],
    c0_size: usize,
    seed: u64,
) -> Result<Instance> {
    load_adult(path, grouping)?.instance(quotas, c0_size, seed)
}

#[cfg(test)]
mod tests {
    use std::io::Write;

    use super::*;

    const SAMPLE: &str = "\
39, State-gov, 77516, Bachelors, 13, Never-married, Adm-clerical, Not-in-family, White, Male, 2174, 0, 40, United-States, <=50K
50, Self-emp-not-inc, 83311, Bachelors, 13, Married-civ-spouse, Exec-managerial, Husband, White, Male, 0, 0, 13, United-States, <=50K

38, Private, 215646, HS-grad, 9, Divorced, Handlers-cleaners, Not-in-family, Black, Female, 0, 0, 40, United-States, <=50K
";

    fn sample_file(text: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(text.as_bytes()).unwrap();
        f
    }

    #[test]
    fn parses_and_standardises() {
        let f = sample_file(SAMPLE);
        let data = load_adult(f.path(), AdultGrouping::Gender).unwrap();
        assert_eq!(data.groups, vec![0, 0, 1]);
        assert_eq!(data.points.len(), 3);
        for j in 0..6 {
            let col: Vec<f64> = (0..3).map(|i| data.points.point(i)[j]).collect();
            let mean = col.iter().sum::<f64>() / 3.0;
            assert!(mean.abs() < 1e-12);
        }
        let race = load_adult(f.path(), AdultGrouping::Race).unwrap();
        assert_eq!(race.groups, vec![0, 0, 4]);
    }

    #[test]
    fn short_row_is_malformed() {
        let f = sample_file("39, State-gov, 77516\n");
        assert!(matches!(
            load_adult(f.path(), AdultGrouping::Gender),
            Err(Error::MalformedRow { row: 1, .. })
        ));
    }

    #[test]
    fn missing_file_is_io() {
        let err = load_adult("/no/such/adult.data", AdultGrouping::Race).unwrap_err();
        assert!(err.is_io());
    }
}
