// Placeholder main; the full command set lands with the io module.
int main() { return 0; }
