import init, { classify, positive, symconv, symmetric_game_file } from "./pkg/pdcg_web.js";

const $ = (id) => document.getElementById(id);

function show(out, run) {
  out.textContent = run.stdout + (run.stderr ? "\n" + run.stderr : "");
  out.classList.toggle("error", run.code !== 0);
}

function showError(out, message) {
  out.textContent = message;
  out.classList.add("error");
}

await init();

$("sc-run").addEventListener("click", () => {
  let text;
  try {
    text = symmetric_game_file(Number($("sc-n").value), $("sc-sizes").value);
  } catch (message) {
    showError($("sc-out"), message);
    return;
  }
  show($("sc-out"), symconv(text, true, true, false));
});

$("cl-run").addEventListener("click", () => {
  show($("cl-out"), classify($("cl-text").value, false));
});

$("pos-run").addEventListener("click", () => {
  const run = positive($("pos-text").value, $("pos-cert").checked, $("pos-ext").checked, $("pos-bounds").checked, false);
  show($("pos-out"), run);
});
