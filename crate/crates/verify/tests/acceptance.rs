use std::process::ExitCode;

fn main() -> ExitCode {
    let results = hms_verify::run_all();
    for r in &results {
        println!("{}", r.line());
        for c in r.checks.iter().filter(|c| !c.passed && !c.detail.is_empty()) {
            println!("    {}: {}", c.name, c.detail);
        }
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    println!("acceptance: {} of {} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
