pub mod algebra;
pub mod budget;
pub mod catalog;
pub mod cli;
pub mod criteria;
pub mod discrepancy;
pub mod ideal;
pub mod report;
pub mod thresholds;
pub mod toric;
