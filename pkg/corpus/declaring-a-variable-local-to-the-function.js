function myFunction(arg) {
    var myLocalVariable = arg + 5;
    return myLocalVariable;
}

myFunction(5); // answers 10
