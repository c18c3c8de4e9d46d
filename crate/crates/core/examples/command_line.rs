// Drive the command-line front end in-process on the bundled fixtures.

use std::error::Error;

pub fn run() -> Result<(), Box<dyn Error>> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
    let invocations: [&[&str]; 4] = [
        &["info", "a2.quiver"],
        &["poincare", "a3.quiver"],
        &["--machine", "fixed-points", "a3.quiver", "--list"],
        &["check", "d4.quiver"],
    ];
    for args in invocations {
        let mut argv = vec!["qgrass".to_string()];
        argv.extend(args.iter().map(|a| {
            if a.ends_with(".quiver") {
                format!("{dir}/{a}")
            } else {
                a.to_string()
            }
        }));
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = qgrass::cli::run(&argv, &mut out, &mut err);
        println!("$ qgrass {}   (exit {code})", args.join(" "));
        print!("{}{}", String::from_utf8(out)?, String::from_utf8(err)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
