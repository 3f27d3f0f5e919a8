/** Browser bootstrap: render into #app and wire DOM events. */

import { SessionApi } from "./api.js";
import { AppController } from "./controller.js";
import { renderApp } from "./views.js";
import type { IntervalPair } from "./types.js";

const root = document.getElementById("app");
if (!root) {
  throw new Error("missing #app mount point");
}

const controller = new AppController(new SessionApi(""));
controller.onChange(() => {
  root.innerHTML = renderApp(controller.state);
});
controller.addObject("l1");
controller.addObject("l2");
controller.addObject("l3");
controller.addObject("l4");
root.innerHTML = renderApp(controller.state);

let dragFrom = -1;

root.addEventListener("dragstart", (event) => {
  const item = (event.target as HTMLElement).closest<HTMLElement>(".rank-item");
  if (item) {
    dragFrom = Number(item.dataset.index);
    event.dataTransfer?.setData("text/plain", String(dragFrom));
  }
});

root.addEventListener("dragover", (event) => {
  if ((event.target as HTMLElement).closest(".rank-item")) {
    event.preventDefault();
  }
});

root.addEventListener("drop", (event) => {
  const item = (event.target as HTMLElement).closest<HTMLElement>(".rank-item");
  if (item && dragFrom >= 0) {
    event.preventDefault();
    controller.moveObject(dragFrom, Number(item.dataset.index));
    dragFrom = -1;
  }
});

function collectCardEntries(): Array<IntervalPair | null> {
  const inputs = root!.querySelectorAll<HTMLInputElement>("input[data-slot]");
  const bySlot = new Map<number, { lo?: string; hi?: string }>();
  inputs.forEach((input) => {
    const slot = Number(input.dataset.slot);
    const entry = bySlot.get(slot) ?? {};
    if (input.dataset.bound === "lo") {
      entry.lo = input.value;
    } else {
      entry.hi = input.value;
    }
    bySlot.set(slot, entry);
  });
  const entries: Array<IntervalPair | null> = [];
  for (let slot = 0; slot < bySlot.size; slot += 1) {
    const entry = bySlot.get(slot);
    entries.push(
      entry && entry.lo !== "" && entry.hi !== ""
        ? [Number(entry.lo), Number(entry.hi)]
        : null,
    );
  }
  return entries;
}

root.addEventListener("submit", (event) => {
  const form = (event.target as HTMLElement).closest<HTMLFormElement>(
    "form[data-action='add-object']",
  );
  if (form) {
    event.preventDefault();
    const input = form.querySelector<HTMLInputElement>("input[name='object-name']");
    if (input) {
      controller.addObject(input.value);
      input.value = "";
    }
  }
});

root.addEventListener("click", (event) => {
  const button = (event.target as HTMLElement).closest<HTMLElement>("[data-action]");
  if (!button || button.tagName === "FORM") {
    return;
  }
  switch (button.dataset.action) {
    case "start":
      void controller.start();
      break;
    case "diagnose":
      void controller.saveCardsAndDiagnose(collectCardEntries());
      break;
    case "accept":
      void controller.accept();
      break;
    case "revise":
      void controller.revise();
      break;
    case "restart":
      controller.restart();
      break;
    default:
      break;
  }
});
