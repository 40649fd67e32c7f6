#include <cstdio>

int main() {
    std::puts("hgx: placeholder");
    return 0;
}
