import { resolveServiceUrl } from "./api";
import { createApp } from "./app";
import "./style.css";

const root = document.getElementById("app");
if (root === null) {
  throw new Error("missing #app mount point");
}
createApp(root, resolveServiceUrl(window.location.search));
