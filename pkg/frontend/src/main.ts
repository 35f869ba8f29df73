/**
 * App wiring: live-updating panels (debounced), optional second scenario for
 * side-by-side comparison, sweep chart, and copy-link URL state.
 */

import { ApiClient, FieldError, sweepGrid } from "./api.js";
import { drawChart } from "./chart.js";
import { renderFieldErrors, renderPanel } from "./panel.js";
import {
  CalculatorState,
  DEBOUNCE_MS,
  DEFAULT_INPUTS,
  RequestSequencer,
  ScenarioInputs,
  SweepKind,
  stateFromQuery,
  stateToQuery,
  validateInputs,
} from "./state.js";

const api = new ApiClient(
  new URLSearchParams(window.location.search).get("api") ?? "http://127.0.0.1:8000",
);

const state: CalculatorState = stateFromQuery(window.location.search);

interface PanelBinding {
  form: HTMLElement;
  output: HTMLElement;
  sequencer: RequestSequencer;
  inputs: () => ScenarioInputs;
}

function readForm(form: HTMLElement): ScenarioInputs {
  const value = (name: string): string =>
    (form.querySelector(`[name="${name}"]`) as HTMLInputElement).value;
  return {
    p: Number(value("p")),
    n_per_group: Number(value("n_per_group")),
    effect_size_sd: Number(value("effect_size_sd")),
    prior_h1: Number(value("prior_h1")),
    alpha: Number(value("alpha")),
    approach: value("approach") === "p_less_than" ? "p_less_than" : "p_equals",
  };
}

function fillForm(form: HTMLElement, inputs: ScenarioInputs): void {
  for (const [key, val] of Object.entries(inputs)) {
    const field = form.querySelector(`[name="${key}"]`) as HTMLInputElement | null;
    if (field) field.value = String(val);
  }
}

async function refreshPanel(binding: PanelBinding): Promise<void> {
  const inputs = binding.inputs();
  const errors = validateInputs(inputs);
  renderFieldErrors(binding.form, errors);
  if (errors.size > 0) return; // invalid: no request leaves the browser

  const ticket = binding.sequencer.begin();
  binding.output.classList.add("pending");
  try {
    const response = await api.interpret(inputs);
    if (!binding.sequencer.isCurrent(ticket)) return; // stale: discard
    renderPanel(binding.output, response);
  } catch (err) {
    if (!binding.sequencer.isCurrent(ticket)) return;
    if (err instanceof FieldError && err.field) {
      renderFieldErrors(binding.form, new Map([[err.field, err.message]]));
    } else {
      binding.output.innerHTML = `<div class="warning">service unreachable: ${String(err)}</div>`;
    }
  } finally {
    if (binding.sequencer.isCurrent(ticket)) binding.output.classList.remove("pending");
  }
}

const chartSequencer = new RequestSequencer();

async function refreshChart(): Promise<void> {
  const canvas = document.getElementById("chart") as HTMLCanvasElement;
  const hover = document.getElementById("chart-hover");
  const inputs = readForm(document.getElementById("form-a")!);
  if (validateInputs(inputs).size > 0) return;
  const ticket = chartSequencer.begin();
  try {
    const response = await api.curve(inputs, state.sweep, sweepGrid(state.sweep));
    if (!chartSequencer.isCurrent(ticket)) return;
    drawChart(canvas, response, hover);
  } catch {
    /* chart is best-effort; the panel surfaces errors */
  }
}

function syncUrl(): void {
  const query = stateToQuery(state);
  const api_param = new URLSearchParams(window.location.search).get("api");
  const suffix = api_param ? `&api=${encodeURIComponent(api_param)}` : "";
  window.history.replaceState(null, "", `?${query}${suffix}`);
}

function debounce(fn: () => void, ms: number): () => void {
  let handle: ReturnType<typeof setTimeout> | undefined;
  return () => {
    clearTimeout(handle);
    handle = setTimeout(fn, ms);
  };
}

function bindPanel(formId: string, outputId: string): PanelBinding {
  const form = document.getElementById(formId)!;
  const output = document.getElementById(outputId)!;
  const binding: PanelBinding = {
    form,
    output,
    sequencer: new RequestSequencer(),
    inputs: () => readForm(form),
  };
  const refresh = debounce(() => {
    state.a = readForm(document.getElementById("form-a")!);
    const formB = document.getElementById("form-b");
    state.b = formB && !formB.classList.contains("hidden") ? readForm(formB) : null;
    syncUrl();
    void refreshPanel(binding);
    if (formId === "form-a") void refreshChart();
  }, DEBOUNCE_MS);
  form.addEventListener("input", refresh);
  return binding;
}

function init(): void {
  const panelA = bindPanel("form-a", "panel-a");
  const panelB = bindPanel("form-b", "panel-b");
  fillForm(panelA.form, state.a);
  fillForm(panelB.form, state.b ?? DEFAULT_INPUTS);

  const compareToggle = document.getElementById("compare-toggle") as HTMLInputElement;
  const sideB = document.getElementById("side-b")!;
  const formB = document.getElementById("form-b")!;
  const setCompare = (on: boolean) => {
    sideB.classList.toggle("hidden", !on);
    formB.classList.toggle("hidden", !on);
    state.b = on ? readForm(formB) : null;
    syncUrl();
    if (on) void refreshPanel(panelB);
  };
  compareToggle.checked = state.b !== null;
  setCompare(state.b !== null);
  compareToggle.addEventListener("change", () => setCompare(compareToggle.checked));

  for (const radio of Array.from(document.querySelectorAll<HTMLInputElement>("[name=sweep]"))) {
    radio.checked = radio.value === state.sweep;
    radio.addEventListener("change", () => {
      state.sweep = radio.value as SweepKind;
      syncUrl();
      void refreshChart();
    });
  }

  const copy = document.getElementById("copy-link")!;
  copy.addEventListener("click", () => {
    void navigator.clipboard.writeText(window.location.href);
  });

  void refreshPanel(panelA);
  if (state.b) void refreshPanel(panelB);
  void refreshChart();
}

init();
