/** Dashboard wiring: sliders in, debounced evaluations out, panel refreshed
 * from the latest acknowledged service response.
 */

import { ApiClient } from "./api.js";
import { renderErrorBanner, renderMismatchPanel } from "./panel.js";
import {
  DIMENSION_CONTROLS,
  EXISTING_FIXED,
  REFERENCE_SPECS,
} from "./references.js";
import { EvaluationScheduler } from "./scheduler.js";
import {
  EditableSpec,
  fromSpecJson,
  sessionProblems,
  toSpecJson,
  toggleMode,
} from "./session.js";
import { MismatchReportJson } from "./types.js";

const api = new ApiClient();

const state: {
  spec: EditableSpec;
  pinned: MismatchReportJson | null;
  lastReport: MismatchReportJson | null;
} = {
  spec: fromSpecJson(EXISTING_FIXED),
  pinned: null,
  lastReport: null,
};

const panelHost = document.getElementById("panel") as HTMLElement;
const statusHost = document.getElementById("status") as HTMLElement;
const problemsHost = document.getElementById("problems") as HTMLElement;
const controlsHost = document.getElementById("controls") as HTMLElement;
const retryButton = document.getElementById("retry") as HTMLButtonElement;

const scheduler = new EvaluationScheduler(
  (spec) => api.mismatch(spec),
  {
    onReport: (report) => {
      state.lastReport = report;
      retryButton.hidden = true;
      statusHost.textContent = `evaluated "${report.spec}"`;
      renderMismatchPanel(panelHost, report, state.pinned);
    },
    onError: (error) => {
      // Keep the last good panel; surface the failure and a retry affordance.
      statusHost.textContent = `evaluation failed: ${String(error)}`;
      retryButton.hidden = false;
    },
  },
);

retryButton.addEventListener("click", () => scheduler.retry());

function submit(): void {
  const problems = sessionProblems(state.spec);
  problemsHost.replaceChildren();
  if (problems.length > 0) {
    for (const problem of problems) {
      const item = document.createElement("div");
      item.className = "problem";
      item.textContent = problem;
      problemsHost.appendChild(item);
    }
    statusHost.textContent = "fix the highlighted values to evaluate";
    return;
  }
  scheduler.request(toSpecJson(state.spec, "what-if"));
  statusHost.textContent = "evaluating…";
}

function numberInput(value: number, min: number, max: number, step: number) {
  const input = document.createElement("input");
  input.type = "number";
  input.min = String(min);
  input.max = String(max);
  input.step = String(step);
  input.value = String(value);
  return input;
}

function sliderInput(value: number, min: number, max: number, step: number) {
  const input = document.createElement("input");
  input.type = "range";
  input.min = String(min);
  input.max = String(max);
  input.step = String(step);
  input.value = String(value);
  return input;
}

function renderControls(): void {
  controlsHost.replaceChildren();
  for (const control of DIMENSION_CONTROLS) {
    const entry = state.spec[control.name];
    const row = document.createElement("div");
    row.className = "control-row";

    const label = document.createElement("label");
    label.textContent = `${control.title} (${control.name})`;
    row.appendChild(label);

    const toggle = document.createElement("button");
    toggle.className = "toggle";
    toggle.textContent = entry.mode === "fixed" ? "fixed" : "adjustable";
    toggle.addEventListener("click", () => {
      state.spec[control.name] = toggleMode(state.spec[control.name]);
      renderControls();
      submit();
    });
    row.appendChild(toggle);

    const bind = (input: HTMLInputElement, apply: (value: number) => void) => {
      const handler = () => {
        apply(Number(input.value));
        syncRow();
        submit();
      };
      input.addEventListener("input", handler);
    };

    const inputs = document.createElement("span");
    inputs.className = "inputs";
    let syncRow: () => void;
    if (entry.mode === "fixed") {
      const slider = sliderInput(entry.value, control.min, control.max, control.step);
      const box = numberInput(entry.value, control.min, control.max, control.step);
      syncRow = () => {
        const current = state.spec[control.name];
        if (current.mode === "fixed") {
          slider.value = String(current.value);
          box.value = String(current.value);
        }
      };
      bind(slider, (value) => {
        state.spec[control.name] = { mode: "fixed", value };
      });
      bind(box, (value) => {
        state.spec[control.name] = { mode: "fixed", value };
      });
      inputs.append(slider, box);
    } else {
      const loSlider = sliderInput(entry.lo, control.min, control.max, control.step);
      const hiSlider = sliderInput(entry.hi, control.min, control.max, control.step);
      const loBox = numberInput(entry.lo, control.min, control.max, control.step);
      const hiBox = numberInput(entry.hi, control.min, control.max, control.step);
      syncRow = () => {
        const current = state.spec[control.name];
        if (current.mode === "range") {
          loSlider.value = String(current.lo);
          hiSlider.value = String(current.hi);
          loBox.value = String(current.lo);
          hiBox.value = String(current.hi);
        }
      };
      const setLo = (value: number) => {
        const current = state.spec[control.name];
        if (current.mode === "range") {
          state.spec[control.name] = { mode: "range", lo: value, hi: current.hi };
        }
      };
      const setHi = (value: number) => {
        const current = state.spec[control.name];
        if (current.mode === "range") {
          state.spec[control.name] = { mode: "range", lo: current.lo, hi: value };
        }
      };
      bind(loSlider, setLo);
      bind(loBox, setLo);
      bind(hiSlider, setHi);
      bind(hiBox, setHi);
      const dual = document.createElement("span");
      dual.className = "dual";
      dual.append("lo", loSlider, loBox, "hi", hiSlider, hiBox);
      inputs.append(dual);
    }
    row.appendChild(inputs);
    controlsHost.appendChild(row);
  }
}

function renderReferencePickers(): void {
  const loadSelect = document.getElementById("load-reference") as HTMLSelectElement;
  const pinSelect = document.getElementById("pin-reference") as HTMLSelectElement;
  for (const select of [loadSelect, pinSelect]) {
    for (const spec of REFERENCE_SPECS) {
      const option = document.createElement("option");
      option.value = spec.name;
      option.textContent = spec.name;
      select.appendChild(option);
    }
  }
  const none = document.createElement("option");
  none.value = "";
  none.textContent = "(no pin)";
  pinSelect.prepend(none);
  pinSelect.value = "";

  loadSelect.addEventListener("change", () => {
    const spec = REFERENCE_SPECS.find((s) => s.name === loadSelect.value);
    if (spec) {
      state.spec = fromSpecJson(spec);
      renderControls();
      submit();
    }
  });

  pinSelect.addEventListener("change", async () => {
    const spec = REFERENCE_SPECS.find((s) => s.name === pinSelect.value);
    if (!spec) {
      state.pinned = null;
    } else {
      try {
        state.pinned = await api.mismatch(spec);
      } catch (error) {
        statusHost.textContent = `could not pin reference: ${String(error)}`;
        return;
      }
    }
    if (state.lastReport !== null) {
      renderMismatchPanel(panelHost, state.lastReport, state.pinned);
    }
  });
}

async function boot(): Promise<void> {
  try {
    const health = await api.health();
    const counts = Object.entries(health.counts)
      .map(([gender, count]) => `${count} ${gender.toLowerCase()}`)
      .join(", ");
    statusHost.textContent = `connected: ${health.records} records (${counts})`;
  } catch (error) {
    renderErrorBanner(panelHost, `service unreachable: ${String(error)}`);
    return;
  }
  renderReferencePickers();
  renderControls();
  submit();
}

void boot();
