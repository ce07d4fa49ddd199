use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use lamb_conversion::scenario::FREQUENCY_COLUMN;

fn lambconv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lambconv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write_config(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines
        .map(|l| l.split(',').map(String::from).collect())
        .collect();
    (header, rows)
}

fn summary_value(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key} = ")))
        .unwrap_or_else(|| panic!("{key} missing in {text}"))
        .to_string()
}

#[test]
fn constants_and_transitions() {
    let o = lambconv(&["constants"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("alpha = 7.297"));

    let o = lambconv(&["transition", "fine_structure"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(summary_value(&text, "mode3"), "2p3/2");
    let f: f64 = summary_value(&text, "f_32_MHz").parse().unwrap();
    assert!((f - 10949.0).abs() < 1e-3);
    let life: f64 = summary_value(&text, "lifetime_31_s").parse().unwrap();
    assert!((life / 1.6e-9 - 1.0).abs() < 0.05);

    let o = lambconv(&["transition", "lamb_shift"]);
    assert!(o.status.success());
    let f: f64 = summary_value(&stdout(&o), "f_32_MHz").parse().unwrap();
    assert!((f - 1057.77).abs() < 1e-3);

    let o = lambconv(&["transition", "hyperfine"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn fig1_table() {
    let o = lambconv(&["fig1", "--beta-max", "20", "--steps", "201"]);
    assert!(o.status.success());
    let (header, rows) = parse_csv(&stdout(&o));
    assert_eq!(
        header,
        [
            "beta [1]",
            "f_exact [1]",
            "f_small_approx [1]",
            "f_large_approx [1]"
        ]
    );
    assert_eq!(rows.len(), 201);
    assert_eq!(rows[0][1], "3.33333333e-1");
    let row6 = &rows[60];
    assert_eq!(row6[0].parse::<f64>().unwrap(), 6.0);
    assert!((row6[1].parse::<f64>().unwrap() - 0.029_927_45).abs() < 1e-8);
    let row10 = &rows[100];
    let ratio = row10[3].parse::<f64>().unwrap() / row10[1].parse::<f64>().unwrap();
    assert!((0.95..=1.05).contains(&ratio));

    assert_eq!(
        lambconv(&["fig1", "--beta-max", "10", "--steps", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        lambconv(&["fig1", "--beta-max", "0", "--steps", "10"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn scenario_outputs_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "fs.cfg",
        "channel = fine_structure\nrho22_0 = 1e-4\nratio = paper_unity\n",
    );
    let csv1 = dir.path().join("a.csv");
    let csv2 = dir.path().join("b.csv");
    let sum = dir.path().join("s.txt");
    let o = lambconv(&[
        "scenario",
        "--config",
        &cfg,
        "--out",
        csv1.to_str().unwrap(),
        "--summary",
        sum.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = lambconv(&[
        "scenario",
        "--config",
        &cfg,
        "--out",
        csv2.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let a = fs::read(&csv1).unwrap();
    assert_eq!(a, fs::read(&csv2).unwrap());

    // without --summary the record goes to stderr
    let summary_file = fs::read_to_string(&sum).unwrap();
    assert_eq!(summary_file, stderr(&o));
    let eta: f64 = summary_value(&summary_file, "eta_peak").parse().unwrap();
    assert!(eta > 1.0e6 && eta < 1.35e6, "{eta}");
    for key in ["tau_s", "N", "N31", "gamma_31_per_s", "sigma_max_cm2"] {
        summary_value(&summary_file, key);
    }

    let (header, rows) = parse_csv(&String::from_utf8(a).unwrap());
    assert!(header.iter().all(|h| h.contains('[') && h.ends_with(']')));
    assert_eq!(rows.len(), 101);
}

#[test]
fn scenario_writes_to_configured_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("from_cfg.csv");
    let cfg = write_config(
        dir.path(),
        "c.cfg",
        &format!(
            "channel = lamb_shift\noutput = {}\nt_steps = 5\n",
            out.display()
        ),
    );
    let o = lambconv(&["scenario", "--config", &cfg]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
    assert_eq!(fs::read_to_string(&out).unwrap().lines().count(), 6);
}

#[test]
fn channels_differ_only_in_frequency() {
    let dir = tempfile::tempdir().unwrap();
    let body = "rho22_0 = 3e-3\nratio = hydrogenic\nflux = 0.2\nt_stop = 2e-6\nt_steps = 41\n";
    let fs_cfg = write_config(
        dir.path(),
        "fs.cfg",
        &format!("channel = fine_structure\n{body}"),
    );
    let ls_cfg = write_config(
        dir.path(),
        "ls.cfg",
        &format!("channel = lamb_shift\n{body}"),
    );
    let a = stdout(&lambconv(&["scenario", "--config", &fs_cfg]));
    let b = stdout(&lambconv(&["scenario", "--config", &ls_cfg]));
    assert_ne!(a, b);
    let strip = |text: &str| {
        let (h, rows) = parse_csv(text);
        let idx = h.iter().position(|c| c == FREQUENCY_COLUMN).unwrap();
        rows.into_iter()
            .map(|mut r| {
                r.remove(idx);
                r.join(",")
            })
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn zero_flux_never_depletes() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "z.cfg", "channel = fine_structure\nflux = 0\n");
    let o = lambconv(&["scenario", "--config", &cfg]);
    assert!(o.status.success());
    let (h, rows) = parse_csv(&stdout(&o));
    let eta = h.iter().position(|c| c == "eta [1]").unwrap();
    assert!(rows.iter().all(|r| r[eta].parse::<f64>().unwrap() == 0.0));
    assert_eq!(summary_value(&stderr(&o), "tau_s"), "no_depletion");
}

#[test]
fn config_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_config(
        dir.path(),
        "bad.cfg",
        "channel = fine_structure\nrho_H = -1\n",
    );
    let o = lambconv(&["scenario", "--config", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("rho_H"));

    let unknown = write_config(dir.path(), "u.cfg", "channel = fine_structure\nfoo = 3\n");
    let o = lambconv(&["scenario", "--config", &unknown]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("foo"));

    let garbled = write_config(dir.path(), "g.cfg", "channel = fine_structure\n\nL: 10\n");
    let o = lambconv(&["scenario", "--config", &garbled]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"));
}

fn sweep(cfg: &str, extra: &[&str]) -> (Vec<(f64, String)>, String) {
    let mut args = vec!["sweep", "--config", cfg];
    args.extend_from_slice(extra);
    let o = lambconv(&args);
    assert!(o.status.success(), "{}", stderr(&o));
    let (_, rows) = parse_csv(&stdout(&o));
    let pts = rows
        .into_iter()
        .map(|r| (r[0].parse().unwrap(), r[1].clone()))
        .collect();
    (pts, stderr(&o))
}

#[test]
fn sweep_length_argmax_at_upper_bound() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "c.cfg", "channel = fine_structure\n");
    let (pts, summary) = sweep(
        &cfg,
        &[
            "--param",
            "L",
            "--min",
            "1",
            "--max",
            "100",
            "--steps",
            "34",
            "--objective",
            "eta_max_peak",
        ],
    );
    let values: Vec<f64> = pts.iter().map(|p| p.1.parse().unwrap()).collect();
    assert!(values.windows(2).all(|w| w[1] > w[0]));
    assert_eq!(
        summary_value(&summary, "argmax_value")
            .parse::<f64>()
            .unwrap(),
        100.0
    );
}

#[test]
fn sweep_detuning_peaks_at_resonance() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "c.cfg", "channel = lamb_shift\n");
    let (_, summary) = sweep(
        &cfg,
        &[
            "--param",
            "detuning",
            "--min",
            "-500",
            "--max",
            "500",
            "--steps",
            "41",
            "--objective",
            "eta_max_peak",
        ],
    );
    let arg: f64 = summary_value(&summary, "argmax_value").parse().unwrap();
    assert!(arg.abs() <= 25.0, "{arg}");
}

#[test]
fn sweep_flux_tau_inverse_law() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "c.cfg", "channel = fine_structure\n");
    let (pts, _) = sweep(
        &cfg,
        &[
            "--param",
            "flux",
            "--min",
            "1e-3",
            "--max",
            "1e3",
            "--steps",
            "13",
            "--log",
            "--objective",
            "tau",
        ],
    );
    let (x0, y0) = (&pts[0].0, pts[0].1.parse::<f64>().unwrap());
    let (x1, y1) = (&pts[12].0, pts[12].1.parse::<f64>().unwrap());
    let slope = (y1.ln() - y0.ln()) / (x1.ln() - x0.ln());
    assert!((slope + 1.0).abs() <= 0.01, "{slope}");
}

#[test]
fn sweep_pulse_energy_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "c.cfg",
        "channel = fine_structure\nt_stop = 1e-7\n",
    );
    let (pts, _) = sweep(
        &cfg,
        &[
            "--param",
            "flux",
            "--min",
            "0.1",
            "--max",
            "10",
            "--steps",
            "5",
            "--objective",
            "pulse_energy",
        ],
    );
    let e: Vec<f64> = pts.iter().map(|p| p.1.parse().unwrap()).collect();
    assert!(e.windows(2).all(|w| w[1] > w[0]));

    let o = lambconv(&[
        "sweep",
        "--config",
        &cfg,
        "--param",
        "foo",
        "--min",
        "0",
        "--max",
        "1",
        "--steps",
        "3",
        "--objective",
        "tau",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = lambconv(&[
        "sweep",
        "--config",
        &cfg,
        "--param",
        "L",
        "--min",
        "2",
        "--max",
        "1",
        "--steps",
        "3",
        "--objective",
        "tau",
    ]);
    assert_eq!(o.status.code(), Some(2));
}
