// Built with: wasm-pack build --target web --out-dir www/pkg (from crates/wasm)
import init, { ca_diagram, analyze_observer, simulate_loop } from "./pkg/observer_wasm.js";

const THERMOSTAT = "{\n  \"boundary\": \"controller inside; ambient air outside\",\n  \"format_version\": \"1\",\n  \"inputs\": [\n    \"Cold\",\n    \"Hot\"\n  ],\n  \"output_map\": {\n    \"OFF\": \"HeaterOff\",\n    \"ON\": \"HeaterOn\"\n  },\n  \"outputs\": [\n    \"HeaterOn\",\n    \"HeaterOff\"\n  ],\n  \"states\": [\n    \"ON\",\n    \"OFF\"\n  ],\n  \"transitions\": {\n    \"OFF,Cold\": \"ON\",\n    \"OFF,Hot\": \"OFF\",\n    \"ON,Cold\": \"ON\",\n    \"ON,Hot\": \"OFF\"\n  }\n}\n";
const FLIP_ENV = "{\n  \"actions\": [\n    \"HeaterOn\",\n    \"HeaterOff\"\n  ],\n  \"env_states\": [\n    \"Cold\",\n    \"Hot\"\n  ],\n  \"env_transitions\": {\n    \"Cold,HeaterOff\": \"Cold\",\n    \"Cold,HeaterOn\": \"Hot\",\n    \"Hot,HeaterOff\": \"Cold\",\n    \"Hot,HeaterOn\": \"Hot\"\n  },\n  \"format_version\": \"1\",\n  \"observation\": {\n    \"Cold\": \"Cold\",\n    \"Hot\": \"Hot\"\n  },\n  \"observations\": [\n    \"Cold\",\n    \"Hot\"\n  ]\n}\n";
const REDUNDANT = "{\n  \"boundary\": \"inside: internal states; outside: environment\",\n  \"format_version\": \"1\",\n  \"inputs\": [\n    \"y0\"\n  ],\n  \"output_map\": {\n    \"a\": \"z0\",\n    \"b\": \"z0\"\n  },\n  \"outputs\": [\n    \"z0\"\n  ],\n  \"states\": [\n    \"a\",\n    \"b\"\n  ],\n  \"transitions\": {\n    \"a,y0\": \"a\",\n    \"b,y0\": \"a\"\n  }\n}\n";

const $ = (id) => document.getElementById(id);

function show(id, f) {
  try {
    $(id).textContent = f();
    $(id).classList.remove("error");
  } catch (e) {
    $(id).textContent = String(e);
    $(id).classList.add("error");
  }
}

function drawCa() {
  show("ca-out", () =>
    ca_diagram(
      Number($("ca-rule").value),
      Number($("ca-width").value),
      Number($("ca-steps").value),
      $("ca-init").value,
      "",
      0,
      false,
    ),
  );
}

function analyze() {
  show("an-out", () => analyze_observer($("an-doc").value));
}

function simulate() {
  show("sim-out", () =>
    simulate_loop($("sim-obs").value, $("sim-env").value, $("sim-init").value, Number($("sim-steps").value)),
  );
}

await init();
$("an-doc").value = REDUNDANT;
$("sim-obs").value = THERMOSTAT;
$("sim-env").value = FLIP_ENV;
$("ca-run").addEventListener("click", drawCa);
$("an-run").addEventListener("click", analyze);
$("sim-run").addEventListener("click", simulate);
drawCa();
analyze();
simulate();
