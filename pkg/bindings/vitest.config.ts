import { defineConfig } from 'vitest/config';

export default defineConfig({
    test: {
        // every call crosses a process boundary into the Python core
        testTimeout: 60_000,
        hookTimeout: 60_000,
    },
});
