//! Walk through the symbolization pipeline step by step: differencing,
//! z-normalization, breakpoints, and the symbol matrix.
//!
//! Run with: cargo run --example sax_pipeline

use motif_tracker::sax::{build_symbol_matrix, Alphabet};
use motif_tracker::series::{preprocess, TimeSeries};

fn main() {
    // a short series with an up-down-up shape repeated twice
    let values = vec![
        10.0, 12.0, 15.0, 13.0, 11.0, 11.5, 12.5, 15.5, 18.5, 16.5, 14.5, 15.0,
    ];
    let series = TimeSeries::new("demo", values).unwrap();
    let pre = preprocess(series).unwrap();

    println!("raw points:        {:?}", pre.raw().values());
    println!("differences:       {:?}", pre.diff());
    println!("sigma of diff:     {:.4}", pre.sigma_diff());
    println!(
        "normalized (first 5): {:?}",
        &pre.norm()[..5.min(pre.norm().len())]
    );

    // breakpoints cut the standard normal into equiprobable slots, so each
    // letter of the alphabet is used about equally often on noise
    let alphabet = Alphabet::new(4).unwrap();
    println!("\nalphabet size 4 breakpoints: {:?}", alphabet.breakpoints());

    let matrix = build_symbol_matrix(pre.norm(), 2, &alphabet).unwrap();
    let symbols: String = (0..matrix.len()).map(|i| matrix.symbol(i)).collect();
    println!("window means of 2 points become symbols: {symbols}");
    println!(
        "({} overlapping windows over {} normalized points)",
        matrix.len(),
        pre.norm().len()
    );

    // the repeated up-down-up shape shows up as a repeated substring
    for word in matrix.words().take(3) {
        println!(
            "word {:?} starts at difference index {} and covers {} points",
            word.symbols, word.start, word.covered_length
        );
    }
}
