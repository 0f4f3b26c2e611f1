import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    // the end-to-end file boots the real analysis service
    testTimeout: 30_000,
    hookTimeout: 30_000,
  },
});
