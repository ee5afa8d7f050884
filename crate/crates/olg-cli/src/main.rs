use olg_cli::commands::{cmd_report, cmd_solve, cmd_sweep, cmd_verify, EXIT_CONFIG};
use std::path::PathBuf;
use std::process::exit;

const USAGE: &str = "\
usage: olg <command> [options]

commands:
  solve  --config PATH --out PATH
      Solve the steady state and write a one-row CSV.
  verify --config PATH [--horizon T] [--grid N] [--out PATH]
      Solve, run the brute-force oracle, and print the comparison.
  sweep  --config PATH --param NAME --from X --to Y --steps N --out PATH
      Re-solve along a parameter grid and write one CSV row per point.
  report --config PATH --out PATH
      Evaluate the 4x4 comparative-statics sign table and write it as CSV.

exit codes: 0 ok, 2 config, 3 non-convergence, 4 invariant violation,
            5 oracle disagreement";

struct Args {
    flags: Vec<(String, String)>,
}

impl Args {
    fn parse(argv: &[String]) -> Result<Args, String> {
        let mut flags = Vec::new();
        let mut i = 0;
        while i < argv.len() {
            let key = &argv[i];
            if !key.starts_with("--") {
                return Err(format!("unexpected argument '{key}'"));
            }
            let Some(value) = argv.get(i + 1) else {
                return Err(format!("flag '{key}' needs a value"));
            };
            flags.push((key[2..].to_string(), value.clone()));
            i += 2;
        }
        Ok(Args { flags })
    }

    fn get(&self, name: &str) -> Option<&str> {
        self.flags
            .iter()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v.as_str())
    }

    fn require(&self, name: &str) -> Result<&str, String> {
        self.get(name).ok_or_else(|| format!("missing --{name}"))
    }

    fn require_f64(&self, name: &str) -> Result<f64, String> {
        self.require(name)?
            .parse()
            .map_err(|_| format!("--{name} expects a number"))
    }

    fn require_usize(&self, name: &str) -> Result<usize, String> {
        self.require(name)?
            .parse()
            .map_err(|_| format!("--{name} expects a nonnegative integer"))
    }

    fn get_usize(&self, name: &str) -> Result<Option<usize>, String> {
        match self.get(name) {
            None => Ok(None),
            Some(raw) => raw
                .parse()
                .map(Some)
                .map_err(|_| format!("--{name} expects a nonnegative integer")),
        }
    }
}

fn run() -> Result<i32, String> {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let Some(command) = argv.first() else {
        return Err("missing command".to_string());
    };
    let args = Args::parse(&argv[1..])?;

    let code = match command.as_str() {
        "solve" => {
            let config = PathBuf::from(args.require("config")?);
            let out = PathBuf::from(args.require("out")?);
            cmd_solve(&config, &out)
        }
        "verify" => {
            let config = PathBuf::from(args.require("config")?);
            let horizon = args.get_usize("horizon")?;
            let grid = args.get_usize("grid")?;
            let out = args.get("out").map(PathBuf::from);
            cmd_verify(&config, horizon, grid, out.as_deref())
        }
        "sweep" => {
            let config = PathBuf::from(args.require("config")?);
            let param = args.require("param")?.to_string();
            let from = args.require_f64("from")?;
            let to = args.require_f64("to")?;
            let steps = args.require_usize("steps")?;
            let out = PathBuf::from(args.require("out")?);
            cmd_sweep(&config, &param, from, to, steps, &out)
        }
        "report" => {
            let config = PathBuf::from(args.require("config")?);
            let out = PathBuf::from(args.require("out")?);
            cmd_report(&config, &out)
        }
        other => return Err(format!("unknown command '{other}'")),
    };
    Ok(code)
}

fn main() {
    match run() {
        Ok(code) => exit(code),
        Err(msg) => {
            eprintln!("error: usage: {msg}");
            eprintln!("{USAGE}");
            exit(EXIT_CONFIG);
        }
    }
}
