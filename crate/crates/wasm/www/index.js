import init, { coherence, reconstruct, characters, fixture_names, fixture } from "./pkg/predual_wasm.js";

const $ = (id) => document.getElementById(id);

function show(result, statusEl, outEl, asJson) {
  const v = JSON.parse(result);
  if (v.error) {
    statusEl.textContent = "error";
    statusEl.className = "status fail";
    outEl.textContent = v.error;
    return;
  }
  statusEl.textContent = v.passed ? "all checks pass" : "some checks fail";
  statusEl.className = "status " + (v.passed ? "pass" : "fail");
  const { text, ...rest } = v;
  outEl.textContent = asJson ? JSON.stringify(rest, null, 2) : text;
}

async function main() {
  await init();

  $("coh-run").addEventListener("click", () => {
    const r = coherence($("coh-left").value, $("coh-right").value, $("coh-dims").value);
    show(r, $("coh-status"), $("coh-out"), false);
  });

  const select = $("doc-fixture");
  for (const name of JSON.parse(fixture_names())) {
    const opt = document.createElement("option");
    opt.value = opt.textContent = name;
    select.appendChild(opt);
  }
  select.value = "z2_characters";
  const load = () => { $("doc-text").value = fixture(select.value); };
  select.addEventListener("change", load);
  load();

  const run = (op) => () => show(op($("doc-text").value, $("doc-field").value), $("doc-status"), $("doc-out"), $("doc-json").checked);
  $("rec-run").addEventListener("click", run(reconstruct));
  $("chr-run").addEventListener("click", run(characters));
}

main();
